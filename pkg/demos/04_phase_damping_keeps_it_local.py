"""Phase damping records which-path information but moves no entanglement.

Unlike amplitude damping, a dephasing environment never becomes entangled
with anything: every system-environment and environment-environment
bipartition stays PPT (hence separable, for two qubits) at every point of
the (r, p) plane.  The system entanglement of a Bell pair simply decays as
(1 - p) cos(r), with no sudden death before p = 1.
"""
import math

import numpy as np

from unruhx import (
    BoundaryQuery,
    ChannelSpec,
    GridSpec,
    SweepConfig,
    apply_unruh,
    find_boundary,
    ppt_test,
    preset_params,
    reduce,
    evolve_total,
    x_state,
)
from unruhx.sweep import PARTITION_LABELS

bell = x_state(preset_params("bell"))
worst = {pid: 0.0 for pid in ("RER", "REA", "EAER")}
for r in np.linspace(0.0, math.pi / 4, 17):
    rho_r = apply_unruh(bell, float(r))
    for p in np.linspace(0.0, 1.0, 17):
        total = evolve_total(rho_r, ChannelSpec.equal("phase", float(p)))
        for pid in worst:
            res = ppt_test(reduce(total, PARTITION_LABELS[pid]))
            worst[pid] = min(worst[pid], res.min_eigenvalue)

print("most negative partial-transpose eigenvalue over a 17 x 17 grid:")
for pid, v in worst.items():
    print(f"  {pid:5s}: {v:+.3e}   (PPT holds: {v >= -1e-10})")

cfg = SweepConfig(preset_params("bell"), "phase", GridSpec(0, math.pi / 4, 65), GridSpec(0, 1, 65))
print()
print("sudden-death search for the system partition at fixed r:")
for r in (0.0, 0.4, math.pi / 4 - 1e-3):
    res = find_boundary(cfg, BoundaryQuery("SD", "AR", "p", r))
    print(f"  r = {r:.4f}: {'none' if res.value is None else f'{res.value:.6f}'}")
print()
print("No SD below p = 1 for the Bell state: dephasing only thins the")
print("coherence by (1 - p) while acceleration supplies the cos(r) factor.")
