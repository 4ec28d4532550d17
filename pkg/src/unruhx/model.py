"""State preparation and open-system evolution for accelerated two-qubit X states.

Two qubits A and R start in an X-type state.  R is observed by a uniformly
accelerated detector: from that viewpoint its vacuum and excited modes split
into Rindler region-I/region-II partners,

    |0>  ->  cos(r) |0_I 0_II> + sin(r) |1_I 1_II>
    |1>  ->  |1_I 0_II>

with cos(r) = (exp(-2 pi omega c / a) + 1)^(-1/2), and region II is traced
away because it is causally disconnected.  Both remaining qubits then couple
to independent single-qubit environments, either amplitude damping (energy
loss with probability p) or phase damping (which-path recording without
energy loss), each realised as a Stinespring isometry into a one-qubit
environment.  Everything stays inside a 4-qubit (16 x 16) space except for
the transient 3-qubit step inside :func:`apply_unruh`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .qmat import (
    DensityMatrix,
    PhysicalityError,
    kron,
    partial_trace,
    permute_subsystems,
)

__all__ = [
    "XParams",
    "AccelParams",
    "ChannelSpec",
    "KrausSet",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "x_state",
    "r_from_acceleration",
    "unruh_isometry",
    "apply_unruh",
    "channel_isometry",
    "kraus_from_isometry",
    "evolve_total",
    "evolve_total_kraus",
    "apply_kraus",
    "reduce",
]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

R_MAX = math.pi / 4

VALIDITY_TOL = 1e-12


@dataclass(frozen=True)
class XParams:
    """Correlation triple (c1, c2, c3) of an X state, signed values in [-1, 1].

    The state rho = (I + sum_i c_i sigma_i x sigma_i) / 4 is Bell diagonal;
    it is a valid density matrix iff all four eigenvalues

        (1 + c1 - c2 + c3)/4,  (1 - c1 + c2 + c3)/4,
        (1 + c1 + c2 - c3)/4,  (1 - c1 - c2 - c3)/4

    are nonnegative.
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            v = getattr(self, name)
            if not (-1.0 <= v <= 1.0):
                raise ValueError(f"{name} = {v} outside [-1, 1]")

    def bell_spectrum(self) -> np.ndarray:
        c1, c2, c3 = self.c1, self.c2, self.c3
        return np.array(
            [
                (1 + c1 - c2 + c3) / 4,
                (1 - c1 + c2 + c3) / 4,
                (1 + c1 + c2 - c3) / 4,
                (1 - c1 - c2 - c3) / 4,
            ]
        )

    @property
    def min_eigenvalue(self) -> float:
        return float(self.bell_spectrum().min())

    def is_valid(self, tol: float = VALIDITY_TOL) -> bool:
        return self.min_eigenvalue >= -tol

    def best_sign_min_eigenvalue(self) -> float:
        """Largest minimum eigenvalue attainable by re-signing (|c1|,|c2|,|c3|).

        Sign-invariant; if even this is negative, no sign assignment of the
        magnitudes yields a physical state.
        """
        a1, a2, a3 = abs(self.c1), abs(self.c2), abs(self.c3)
        best = -np.inf
        for s1, s2, s3 in product((1, -1), repeat=3):
            m = XParams(s1 * a1, s2 * a2, s3 * a3).min_eigenvalue
            best = max(best, m)
        return float(best)


@dataclass(frozen=True)
class AccelParams:
    """Acceleration parameter r in [0, pi/4]; r = pi/4 is infinite acceleration."""

    r: float

    def __post_init__(self):
        if not (0.0 <= self.r <= R_MAX + 1e-12):
            raise ValueError(f"acceleration parameter r = {self.r} outside [0, pi/4]")


def r_from_acceleration(omega: float, a: float, c_light: float = 1.0) -> AccelParams:
    """r from mode frequency, proper acceleration and light speed.

    cos(r) = (exp(-2 pi omega c / a) + 1)^(-1/2); the argument always lies in
    (2^(-1/2), 1], so r in [0, pi/4) for any positive inputs.
    """
    for name, v in (("omega", omega), ("a", a), ("c_light", c_light)):
        if not v > 0:
            raise ValueError(f"{name} must be positive, got {v}")
    x = math.exp(-2.0 * math.pi * omega * c_light / a)
    # mathematically in (2^(-1/2), 1]; rounding may dip one ulp below the
    # lower bound, which would push r past pi/4
    arg = max(1.0 / math.sqrt(1.0 + x), 2 ** (-0.5))
    return AccelParams(math.acos(arg))


def _r_value(r) -> float:
    if isinstance(r, AccelParams):
        return r.r
    return AccelParams(float(r)).r


@dataclass(frozen=True)
class ChannelSpec:
    """Damping channel: kind plus per-qubit decay probabilities."""

    kind: str
    p_a: float
    p_r: float

    def __post_init__(self):
        if self.kind not in ("amplitude", "phase"):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        for name in ("p_a", "p_r"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} = {v} outside [0, 1]")

    @classmethod
    def equal(cls, kind: str, p: float) -> "ChannelSpec":
        return cls(kind, p, p)

    @property
    def q_a(self) -> float:
        return 1.0 - self.p_a

    @property
    def q_r(self) -> float:
        return 1.0 - self.p_r


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators of a channel; completeness is checked at construction."""

    operators: tuple

    def __post_init__(self):
        acc = np.zeros((2, 2), dtype=complex)
        ops = []
        for m in self.operators:
            m = np.asarray(m, dtype=complex)
            if m.shape != (2, 2):
                raise ValueError(f"Kraus operator has shape {m.shape}, expected 2x2")
            acc = acc + m.conj().T @ m
            ops.append(m)
        residual = float(np.abs(acc - np.eye(2)).max())
        if residual > 1e-12:
            raise ValueError(
                f"Kraus completeness failure: max |sum M^dag M - I| = {residual:.3e}"
            )
        object.__setattr__(self, "operators", tuple(ops))


def x_state(params: XParams, allow_nonphysical: bool = False) -> DensityMatrix:
    """X state rho = (I + c1 XX + c2 YY + c3 ZZ)/4 over subsystems (A, R).

    Diagonal (1+c3, 1-c3, 1-c3, 1+c3)/4, anti-diagonal
    (c1-c2, c1+c2, c1+c2, c1-c2)/4.  Invalid (non-PSD) parameters raise unless
    ``allow_nonphysical`` is set, in which case the state carries the flag.
    """
    valid = params.is_valid()
    if not valid and not allow_nonphysical:
        own = params.min_eigenvalue
        best = params.best_sign_min_eigenvalue()
        raise PhysicalityError(
            f"X-state parameters ({params.c1:g}, {params.c2:g}, {params.c3:g}) give a "
            f"non-positive state: minimum eigenvalue {own:.6g}; best over sign "
            f"assignments of the magnitudes {best:.6g}",
            min_eigenvalue=best,
        )
    m = 0.25 * (
        np.eye(4, dtype=complex)
        + params.c1 * kron(SIGMA_X, SIGMA_X)
        + params.c2 * kron(SIGMA_Y, SIGMA_Y)
        + params.c3 * kron(SIGMA_Z, SIGMA_Z)
    )
    return DensityMatrix(m, ("A", "R"), nonphysical=not valid)


def unruh_isometry(r) -> np.ndarray:
    """4x2 isometry splitting one qubit into its region-I/region-II pair.

    Columns are images of |0> and |1> in the (region I, region II) basis with
    region I as the leading qubit.
    """
    rv = _r_value(r)
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = math.cos(rv)
    v[3, 0] = math.sin(rv)
    v[2, 1] = 1.0
    return v


def channel_isometry(spec: ChannelSpec, side: str) -> np.ndarray:
    """4x2 Stinespring isometry of the damping channel on one qubit.

    Output basis order is (system, environment).  Amplitude damping:
    |1>|0_E> -> sqrt(q)|1 0> + sqrt(p)|0 1>; phase damping:
    |1>|0_E> -> sqrt(q)|1 0> + sqrt(p)|1 1>; |0>|0_E> is left alone by both.
    """
    if side == "A":
        p = spec.p_a
    elif side == "R":
        p = spec.p_r
    else:
        raise ValueError(f"side must be 'A' or 'R', got {side!r}")
    q = 1.0 - p
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = 1.0
    v[2, 1] = math.sqrt(q)
    if spec.kind == "amplitude":
        v[1, 1] = math.sqrt(p)
    else:
        v[3, 1] = math.sqrt(p)
    return v


def kraus_from_isometry(v: np.ndarray) -> KrausSet:
    """Kraus operators read off the rows of a 4x2 system+environment isometry."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (4, 2):
        raise ValueError(f"expected a 4x2 isometry, got shape {v.shape}")
    residual = float(np.abs(v.conj().T @ v - np.eye(2)).max())
    if residual > 1e-12:
        raise ValueError(f"not an isometry: max |V^dag V - I| = {residual:.3e}")
    # row index is (system_bit * 2 + environment_bit)
    m0 = v[0::2, :]
    m1 = v[1::2, :]
    return KrausSet((m0, m1))


def _apply_isometry(
    rho: DensityMatrix, v: np.ndarray, target: str, new_labels: tuple
) -> DensityMatrix:
    """Conjugate by (I x V x I) where V maps the target qubit into len(new_labels) qubits."""
    t = rho.axis(target)
    left = np.eye(2**t, dtype=complex)
    right = np.eye(2 ** (rho.n_qubits - t - 1), dtype=complex)
    w = np.kron(np.kron(left, v), right)
    out = w @ rho.mat @ w.conj().T
    labels = rho.subsystems[:t] + tuple(new_labels) + rho.subsystems[t + 1 :]
    return DensityMatrix(out, labels, nonphysical=rho.nonphysical)


def apply_unruh(rho: DensityMatrix, r) -> DensityMatrix:
    """Unruh transformation of qubit R followed by the region-II trace.

    At r = 0 this is the identity channel.  The net single-qubit action is
    |0><0| -> cos^2(r)|0><0| + sin^2(r)|1><1|, |0><1| -> cos(r)|0><1|,
    |1><1| -> |1><1|.
    """
    if rho.n_qubits != 2 or "R" not in rho.subsystems:
        raise ValueError(
            f"apply_unruh needs a 2-qubit state containing label 'R', got {rho.subsystems}"
        )
    extended = _apply_isometry(rho, unruh_isometry(r), "R", ("R", "RII"))
    return partial_trace(extended, rho.subsystems)


def evolve_total(rho_ar: DensityMatrix, spec: ChannelSpec) -> DensityMatrix:
    """Attach both environments in |0> and apply the per-qubit damping isometries.

    Output is the 16 x 16 state over (A, R, EA, ER); the trace is preserved.
    """
    if set(rho_ar.subsystems) != {"A", "R"}:
        raise ValueError(f"expected a state over (A, R), got {rho_ar.subsystems}")
    step = _apply_isometry(rho_ar, channel_isometry(spec, "A"), "A", ("A", "EA"))
    step = _apply_isometry(step, channel_isometry(spec, "R"), "R", ("R", "ER"))
    return permute_subsystems(step, ("A", "R", "EA", "ER"))


def evolve_total_kraus(rho_ar: DensityMatrix, spec: ChannelSpec) -> DensityMatrix:
    """Same total state assembled from the Kraus operators instead of isometries.

    Uses U |xi>|0_E> = sum_k M_k |xi>|k_E| on each side, so the blocks of the
    output are M_mu rho M_nu^dag tagged by environment indices (mu, nu).
    Exists as an independent cross-check of :func:`evolve_total`.
    """
    if set(rho_ar.subsystems) != {"A", "R"}:
        raise ValueError(f"expected a state over (A, R), got {rho_ar.subsystems}")
    rho = permute_subsystems(rho_ar, ("A", "R"))
    ka = kraus_from_isometry(channel_isometry(spec, "A")).operators
    kr = kraus_from_isometry(channel_isometry(spec, "R")).operators
    big = np.zeros((4, 2, 2, 4, 2, 2), dtype=complex)  # (ar, ea, er | ar', ea', er')
    for ea, er, eb, es in product(range(2), repeat=4):
        k_left = np.kron(ka[ea], kr[er])
        k_right = np.kron(ka[eb], kr[es])
        big[:, ea, er, :, eb, es] = k_left @ rho.mat @ k_right.conj().T
    total = big.reshape(16, 16)
    return DensityMatrix(total, ("A", "R", "EA", "ER"), nonphysical=rho.nonphysical)


def apply_kraus(rho: DensityMatrix, k: KrausSet, target: str) -> DensityMatrix:
    """Channel action sum_mu (I x M_mu x I) rho (...)^dag on the target qubit."""
    t = rho.axis(target)
    left = np.eye(2**t, dtype=complex)
    right = np.eye(2 ** (rho.n_qubits - t - 1), dtype=complex)
    acc = np.zeros_like(rho.mat)
    for m in k.operators:
        op = np.kron(np.kron(left, m), right)
        acc = acc + op @ rho.mat @ op.conj().T
    return DensityMatrix(acc, rho.subsystems, nonphysical=rho.nonphysical)


def reduce(total: DensityMatrix, partition) -> DensityMatrix:
    """Two-qubit reduced state in the requested label order."""
    pair = tuple(partition)
    if len(pair) != 2 or pair[0] == pair[1]:
        raise ValueError(f"partition must be two distinct labels, got {pair}")
    red = partial_trace(total, pair)
    return permute_subsystems(red, pair)
