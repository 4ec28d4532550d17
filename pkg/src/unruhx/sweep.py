"""Grid sweeps over (r, p), sudden-death/birth boundary location, CSV output.

Every grid point is an independent pure computation: build the X state,
push it through the acceleration step and the damping dilation, reduce to
each requested bipartition, and record concurrence plus negativity.  Rows
are emitted r-major (r outer ascending, p inner ascending) regardless of
how they were computed.

Boundary finding brackets the first sign change of (C - zero_tol) on a
64-point pre-scan of the scan axis and refines it by bisection.  A crossing
that lands within axis_tol of the scan-range edge cannot be certified as an
interior transition (the dead or alive region past it is narrower than the
axis resolution) and is reported as absent.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from .entanglement import concurrence, concurrence_x, is_x_type, ppt_test
from .model import ChannelSpec, XParams, apply_unruh, evolve_total, reduce, x_state

__all__ = [
    "PARTITIONS",
    "PARTITION_LABELS",
    "CSV_NAMES",
    "GridSpec",
    "SweepConfig",
    "SweepRow",
    "SweepTable",
    "BoundaryQuery",
    "BoundaryResult",
    "normalize_partition",
    "preset_params",
    "measure_point",
    "run_sweep",
    "find_boundary",
    "write_csv",
]

PARTITION_LABELS = {
    "AR": ("A", "R"),
    "AEA": ("A", "EA"),
    "AER": ("A", "ER"),
    "RER": ("R", "ER"),
    "REA": ("R", "EA"),
    "EAER": ("EA", "ER"),
}
PARTITIONS = tuple(PARTITION_LABELS)
CSV_NAMES = {
    "AR": "AR",
    "AEA": "AEa",
    "AER": "AEr",
    "RER": "REr",
    "REA": "REa",
    "EAER": "EaEr",
}

R_MAX = math.pi / 4
PRESCAN_POINTS = 64


def normalize_partition(name: str) -> str:
    key = str(name).upper()
    if key not in PARTITION_LABELS:
        raise ValueError(
            f"unknown partition {name!r}; expected one of {sorted(PARTITION_LABELS)}"
        )
    return key


def preset_params(name: str) -> XParams:
    """Named initial states: ``bell`` is (1, -1, 1), ``werner:<c>`` is (c, -c, c)."""
    if name == "bell":
        return XParams(1.0, -1.0, 1.0)
    if name.startswith("werner:"):
        c = float(name.split(":", 1)[1])
        return XParams(c, -c, c)
    raise ValueError(f"unknown preset {name!r}; expected 'bell' or 'werner:<c>'")


@dataclass(frozen=True)
class GridSpec:
    min: float
    max: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError(f"grid needs at least 1 step, got {self.steps}")
        if self.max < self.min:
            raise ValueError(f"grid is not monotone: [{self.min}, {self.max}]")
        if self.steps == 1 and self.max != self.min:
            raise ValueError("a 1-step grid needs min == max")

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    params: XParams
    channel_kind: str
    r_grid: GridSpec = GridSpec(0.0, R_MAX, 65)
    p_grid: GridSpec = GridSpec(0.0, 1.0, 65)
    partitions: tuple = PARTITIONS
    allow_nonphysical: bool = False
    # which decay probabilities the p axis drives: both sides (the default),
    # only Alice's ("a", Rob's side pinned to p_r_fixed) or only Rob's ("r")
    p_axis: str = "both"
    p_a_fixed: float = 0.0
    p_r_fixed: float = 0.0

    def __post_init__(self):
        if self.channel_kind not in ("amplitude", "phase"):
            raise ValueError(f"unknown channel kind {self.channel_kind!r}")
        if self.p_axis not in ("both", "a", "r"):
            raise ValueError(f"p_axis must be 'both', 'a' or 'r', got {self.p_axis!r}")
        if not (0.0 <= self.r_grid.min and self.r_grid.max <= R_MAX + 1e-12):
            raise ValueError("r grid must lie within [0, pi/4]")
        if not (0.0 <= self.p_grid.min and self.p_grid.max <= 1.0):
            raise ValueError("p grid must lie within [0, 1]")
        object.__setattr__(
            self, "partitions", tuple(normalize_partition(p) for p in self.partitions)
        )

    def channel_at(self, p: float) -> ChannelSpec:
        if self.p_axis == "both":
            return ChannelSpec.equal(self.channel_kind, p)
        if self.p_axis == "a":
            return ChannelSpec(self.channel_kind, p, self.p_r_fixed)
        return ChannelSpec(self.channel_kind, self.p_a_fixed, p)


@dataclass(frozen=True)
class SweepRow:
    r: float
    p: float
    concurrence: dict
    negativity: dict


@dataclass
class SweepTable:
    partitions: tuple
    rows: list = field(default_factory=list)
    nonphysical: bool = False


def _measures(total, partition_ids):
    conc = {}
    neg = {}
    for pid in partition_ids:
        red = reduce(total, PARTITION_LABELS[pid])
        if is_x_type(red, 1e-10):
            conc[pid] = concurrence_x(red).value
        else:
            conc[pid] = concurrence(red).value
        neg[pid] = ppt_test(red).negativity
    return conc, neg


def measure_point(cfg: SweepConfig, r: float, p: float):
    """Concurrence and negativity of every requested partition at one (r, p)."""
    rho0 = x_state(cfg.params, allow_nonphysical=cfg.allow_nonphysical)
    total = evolve_total(apply_unruh(rho0, r), cfg.channel_at(p))
    return _measures(total, cfg.partitions)


def run_sweep(cfg: SweepConfig) -> SweepTable:
    """Evaluate the full (r, p) grid; rows ordered r-major."""
    if not cfg.params.is_valid() and not cfg.allow_nonphysical:
        # fail before any computation, with the same message x_state gives
        x_state(cfg.params, allow_nonphysical=False)
    rho0 = x_state(cfg.params, allow_nonphysical=cfg.allow_nonphysical)
    table = SweepTable(cfg.partitions, nonphysical=rho0.nonphysical)
    for r in cfg.r_grid.values():
        rho_r = apply_unruh(rho0, float(r))
        for p in cfg.p_grid.values():
            total = evolve_total(rho_r, cfg.channel_at(float(p)))
            conc, neg = _measures(total, cfg.partitions)
            table.rows.append(SweepRow(float(r), float(p), conc, neg))
    return table


@dataclass(frozen=True)
class BoundaryQuery:
    kind: str  # "SD" | "SB"
    partition: str
    scan_axis: str  # "p" | "r"
    fixed_value: float
    zero_tol: float = 1e-9
    axis_tol: float = 1e-6

    def __post_init__(self):
        if self.kind not in ("SD", "SB"):
            raise ValueError(f"kind must be 'SD' or 'SB', got {self.kind!r}")
        if self.scan_axis not in ("p", "r"):
            raise ValueError(f"scan_axis must be 'p' or 'r', got {self.scan_axis!r}")
        object.__setattr__(self, "partition", normalize_partition(self.partition))


@dataclass(frozen=True)
class BoundaryResult:
    kind: str
    partition: str
    scan_axis: str
    fixed_axis: str
    fixed_value: float
    value: float | None  # None: no transition in range
    multiplicity: int


def find_boundary(cfg: SweepConfig, query: BoundaryQuery) -> BoundaryResult:
    """Locate the first sudden-death or sudden-birth point along one axis.

    SD is the smallest axis value where the concurrence crosses from above
    zero_tol to at or below it; SB is the opposite crossing.  When several
    transitions exist the first is refined and the count is reported.
    """
    rho0 = x_state(cfg.params, allow_nonphysical=cfg.allow_nonphysical)
    pid = query.partition
    labels = PARTITION_LABELS[pid]

    if query.scan_axis == "p":
        lo, hi = cfg.p_grid.min, cfg.p_grid.max
        rho_r = apply_unruh(rho0, query.fixed_value)

        def conc_at(x: float) -> float:
            total = evolve_total(rho_r, cfg.channel_at(x))
            red = reduce(total, labels)
            return (
                concurrence_x(red).value
                if is_x_type(red, 1e-10)
                else concurrence(red).value
            )

    else:
        lo, hi = cfg.r_grid.min, cfg.r_grid.max
        spec = cfg.channel_at(query.fixed_value)

        def conc_at(x: float) -> float:
            total = evolve_total(apply_unruh(rho0, x), spec)
            red = reduce(total, labels)
            return (
                concurrence_x(red).value
                if is_x_type(red, 1e-10)
                else concurrence(red).value
            )

    def alive(x: float) -> bool:
        return conc_at(x) > query.zero_tol

    xs = np.linspace(lo, hi, PRESCAN_POINTS)
    states = [alive(float(x)) for x in xs]
    want = (True, False) if query.kind == "SD" else (False, True)
    brackets = [
        (float(xs[i]), float(xs[i + 1]))
        for i in range(len(xs) - 1)
        if (states[i], states[i + 1]) == want
    ]
    fixed_axis = "r" if query.scan_axis == "p" else "p"

    def refine(a: float, b: float) -> float:
        left_alive = want[0]
        while b - a > query.axis_tol:
            mid = 0.5 * (a + b)
            if alive(mid) == left_alive:
                a = mid
            else:
                b = mid
        return 0.5 * (a + b)

    kept = []
    for a, b in brackets:
        x = refine(a, b)
        # a crossing this close to the range edge is not resolvable as interior
        if x - lo <= query.axis_tol or hi - x <= query.axis_tol:
            continue
        kept.append(x)
    value = kept[0] if kept else None
    return BoundaryResult(
        query.kind, pid, query.scan_axis, fixed_axis, query.fixed_value, value, len(kept)
    )


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def write_csv(table: SweepTable, destination) -> int:
    """Serialize a sweep table; returns the number of bytes written.

    Header ``r,p`` plus ``C_<part>`` then ``N_<part>`` columns in canonical
    partition order, 9 significant digits, LF line endings.  Tables produced
    under the nonphysical flag are marked with a leading comment line.
    """
    cols = [pid for pid in PARTITIONS if pid in table.partitions]
    lines = []
    if table.nonphysical:
        lines.append("# allow_nonphysical: true")
    header = ["r", "p"]
    header += [f"C_{CSV_NAMES[pid]}" for pid in cols]
    header += [f"N_{CSV_NAMES[pid]}" for pid in cols]
    lines.append(",".join(header))
    for row in table.rows:
        cells = [_fmt(row.r), _fmt(row.p)]
        cells += [_fmt(row.concurrence[pid]) for pid in cols]
        cells += [_fmt(row.negativity[pid]) for pid in cols]
        lines.append(",".join(cells))
    data = ("\n".join(lines) + "\n").encode("utf-8")
    if isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__"):
        with open(destination, "wb") as fh:
            fh.write(data)
    elif isinstance(destination, io.TextIOBase):
        destination.write(data.decode("utf-8"))
    else:
        destination.write(data)
    return len(data)
