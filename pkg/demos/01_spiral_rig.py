"""Build the 346-light spiral dome and inspect its geometry.

The capture rig is modeled as a golden-angle spiral over the unit sphere:
lights trigger one at a time from the camera-side pole (+Z) toward the back.
This script builds the rig, checks the spacing statistics the pipeline relies
on, and writes the rig manifest used by every other demo.
"""

from pathlib import Path

import numpy as np

import polarfield as pf
from polarfield import io as pio
from polarfield.rig import nearest_neighbor_angles

out_dir = Path(__file__).parent / "output" / "01_spiral_rig"
out_dir.mkdir(parents=True, exist_ok=True)

rig = pf.build_spiral_rig(346)
directions = rig.directions

print(f"lights: {rig.n_lights}")
print(f"first light {np.degrees(np.arccos(directions[0, 2])):.2f} deg from +Z, "
      f"last light {np.degrees(np.arccos(-directions[-1, 2])):.2f} deg from -Z")

# Spiral order: z components never increase.
assert np.all(np.diff(directions[:, 2]) <= 0)

spacing = np.degrees(nearest_neighbor_angles(directions))
print(f"nearest-neighbor spacing: mean {spacing.mean():.2f} deg, "
      f"min {spacing.min():.2f}, max {spacing.max():.2f} "
      f"(ratio {spacing.max() / spacing.min():.2f})")

# Direction lookup: which light sits closest to straight-on lighting?
frontal = pf.nearest_light(rig, np.array([0.0, 0.0, 1.0]))
print(f"light nearest +Z: index {frontal}, direction {np.round(directions[frontal], 4)}")

pio.save_rig(rig, out_dir / "rig.json")
print(f"wrote {out_dir / 'rig.json'}")
