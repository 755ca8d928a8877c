"""Relight an OLAT sequence under an environment map, with irradiance.

Any environment map projects onto the rig: each light's weight is the mean
radiance of the surrounding texels (solid-angle weighted, 9 degree cone) and
relighting is the weighted sum over the OLAT images. Separation survives the
sum, so diffuse-only and specular-only relit images come for free, and the
solved normals give a clamped-cosine irradiance map for the same lighting.
"""

import math
from pathlib import Path

import numpy as np

import polarfield as pf
from polarfield import io as pio

out_dir = Path(__file__).parent / "output" / "05_relighting"
out_dir.mkdir(parents=True, exist_ok=True)

scene = pf.make_sphere_scene(96, rho_s=0.3, alpha=50.0)
rig = pf.build_spiral_rig(346)
field = pf.render_olat(scene, rig, threads=2)

# A small sky: warm key light upper-left, cool fill right, dim back light.
height, width = 32, 64
theta = math.pi * (np.arange(height) + 0.5) / height
phi = 2 * math.pi * (np.arange(width) + 0.5) / width - math.pi
dirs = np.zeros((height, width, 3))
dirs[..., 0] = np.sin(theta)[:, None] * np.cos(phi)[None, :]
dirs[..., 1] = np.sin(theta)[:, None] * np.sin(phi)[None, :]
dirs[..., 2] = np.cos(theta)[:, None]
sky = np.zeros((height, width, 3))
for center, rgb, sigma in [((-0.5, 0.5, 0.7), (4.0, 3.0, 2.0), 0.35),
                           ((0.7, 0.0, 0.7), (0.8, 1.2, 2.0), 0.5),
                           ((0.0, -0.3, -0.95), (0.3, 0.3, 0.4), 0.8)]:
    c = np.asarray(center) / np.linalg.norm(center)
    angle = np.arccos(np.clip(dirs @ c, -1, 1))
    sky += np.exp(-((angle / sigma) ** 2))[:, :, None] * np.asarray(rgb)
env = pf.EnvironmentMap(pf.RadianceImage(sky.astype(np.float32)))
pio.write_pfm(env.image, out_dir / "sky.pfm")

weights = pf.env_to_weights(env, rig, cone_deg=9.0)
print(f"light weights: min {weights.weights.min():.3f}, max {weights.weights.max():.3f}")

diffuse, specular, mixed = pf.relight_separated(field, weights, threads=2)
for name, image in (("diffuse", diffuse), ("specular", specular), ("mixed", mixed)):
    pio.write_pfm(image, out_dir / f"relit_{name}.pfm")
    pio.write_png_tonemapped(image, out_dir / f"relit_{name}.png", exposure=0.15)

# Irradiance from the solved normals under the same lighting.
diffuse_seq, _ = pf.separate_field(field, threads=2)
_, normal, _ = pf.solve_lambertian(diffuse_seq, rig, threads=2)
irradiance = pf.irradiance_map(normal, weights, rig, threads=2)
pio.write_pfm(irradiance, out_dir / "irradiance.pfm")
pio.write_png_tonemapped(irradiance, out_dir / "irradiance.png", exposure=0.05)

print(f"relit images and irradiance in {out_dir}")
