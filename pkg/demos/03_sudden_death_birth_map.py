"""Acceleration promotes sudden death and postpones sudden birth.

For a Bell initial state under amplitude damping the boundaries have exact
closed forms: system entanglement dies at p* = cos^2(r) and environment
entanglement is born at p* = sin^2(r).  The bisection-based finder should
land on both curves; larger r pulls the death boundary down (earlier SD)
and pushes the birth boundary up (later SB), until they meet at r = pi/4.
"""
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from unruhx import BoundaryQuery, GridSpec, SweepConfig, find_boundary, preset_params

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

cfg = SweepConfig(
    preset_params("bell"),
    "amplitude",
    r_grid=GridSpec(0.0, math.pi / 4, 65),
    p_grid=GridSpec(0.0, 1.0, 65),
)

rs = np.linspace(0.0, math.pi / 4, 21)
sd, sb = [], []
print(f"{'r':>8}  {'SD p*':>10}  {'cos^2 r':>10}  {'SB p*':>10}  {'sin^2 r':>10}")
for r in rs:
    death = find_boundary(cfg, BoundaryQuery("SD", "AR", "p", float(r)))
    birth = find_boundary(cfg, BoundaryQuery("SB", "EAER", "p", float(r)))
    sd.append(death.value)
    sb.append(birth.value if birth.value is not None else 0.0)
    print(
        f"{r:8.4f}  {death.value:10.6f}  {math.cos(r)**2:10.6f}  "
        f"{sb[-1]:10.6f}  {math.sin(r)**2:10.6f}"
    )

fig, ax = plt.subplots(figsize=(6, 4.5))
ax.plot(rs, sd, "o-", label="sudden death of A-R")
ax.plot(rs, sb, "s-", label="sudden birth of E_A-E_R")
ax.plot(rs, np.cos(rs) ** 2, "k--", lw=1)
ax.plot(rs, np.sin(rs) ** 2, "k:", lw=1)
ax.fill_between(rs, sb, sd, alpha=0.15, label="A-R alive, envs separable")
ax.set_xlabel("acceleration parameter r")
ax.set_ylabel("decay probability p")
ax.set_title("Death and birth boundaries (Bell, amplitude damping)")
ax.legend(loc="center left")
fig.tight_layout()
path = os.path.join(OUT, "03_sd_sb_map.png")
fig.savefig(path, dpi=120)
print(f"plot written to {path}")
