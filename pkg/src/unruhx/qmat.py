"""Dense complex linear algebra for small multi-qubit Hilbert spaces.

Everything operates on plain ``complex128`` numpy arrays, or on
:class:`DensityMatrix`, a square matrix tagged with an ordered tuple of
named qubit subsystems.  Dimensions are capped at five qubits (32 x 32),
so dense storage and LAPACK eigensolvers are always the right tool.

Index convention: the first subsystem label is the most significant bit of
the row/column index, i.e. ``|mn> = |m>_first |n>_second``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "LABELS",
    "HERMITIAN_TOL",
    "TRACE_TOL",
    "PSD_TOL",
    "MAX_QUBITS",
    "PhysicalityError",
    "DensityDiagnostics",
    "DensityMatrix",
    "kron",
    "mul",
    "dagger",
    "trace",
    "add",
    "scale",
    "hermitian_eigenvalues",
    "partial_trace",
    "partial_transpose",
    "permute_subsystems",
    "psd_sqrt",
    "is_density_matrix",
]

#: Recognised subsystem names: Alice's mode, Rob's region-I mode, the
#: causally disconnected region-II partner, and the two local environments.
LABELS = ("A", "R", "RII", "EA", "ER")

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10
MAX_QUBITS = 5


class PhysicalityError(ValueError):
    """A matrix failed a density-matrix requirement (trace, positivity, ...).

    ``min_eigenvalue`` carries the diagnostic value quoted in the message.
    """

    def __init__(self, message: str, *, min_eigenvalue: float | None = None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


def _as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def _hermitize(m: np.ndarray) -> np.ndarray:
    return (m + m.conj().T) / 2.0


def kron(a, b) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def mul(a, b) -> np.ndarray:
    """Matrix product with an explicit conformability check."""
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch in mul: {a.shape} x {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def trace(a) -> complex:
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"trace of a non-square matrix {a.shape}")
    return complex(np.trace(a))


def add(a, b) -> np.ndarray:
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch in add: {a.shape} vs {b.shape}")
    return a + b


def scale(c, a) -> np.ndarray:
    return complex(c) * _as_matrix(a)


def hermitian_eigenvalues(h, vectors: bool = False):
    """Eigenvalues (ascending) of a Hermitian matrix, optionally with vectors.

    The input must be Hermitian within ``HERMITIAN_TOL``; the decomposition is
    performed on the Hermitized part ``(h + h^dag)/2``.  With ``vectors=True``
    returns ``(w, V)`` with orthonormal columns such that ``h = V diag(w) V^dag``.
    """
    h = _as_matrix(h)
    n = h.shape[0]
    if h.shape[0] != h.shape[1]:
        raise ValueError(f"eigenvalues of a non-square matrix {h.shape}")
    if n > 2**MAX_QUBITS:
        raise ValueError(f"dimension {n} exceeds the {2**MAX_QUBITS} limit")
    residual = float(np.abs(h - h.conj().T).max())
    if residual > HERMITIAN_TOL:
        raise ValueError(
            f"matrix is not Hermitian: max |h_ij - conj(h_ji)| = {residual:.3e}"
        )
    hh = _hermitize(h)
    if vectors:
        w, v = np.linalg.eigh(hh)
        return w, v
    return np.linalg.eigvalsh(hh)


@dataclass(frozen=True)
class DensityDiagnostics:
    """Residuals of the three density-matrix requirements."""

    hermitian_residual: float
    trace_residual: float
    min_eigenvalue: float
    ok: bool


def is_density_matrix(rho, tol: float = 1e-10) -> DensityDiagnostics:
    """Pure diagnostic: Hermiticity / trace / positivity residuals of ``rho``.

    Never raises; the caller decides pass/fail.  ``ok`` is the verdict at the
    given tolerance.
    """
    m = rho.mat if isinstance(rho, DensityMatrix) else _as_matrix(rho)
    herm = float(np.abs(m - m.conj().T).max())
    tr = float(abs(np.trace(m) - 1.0))
    mineig = float(np.linalg.eigvalsh(_hermitize(m))[0])
    ok = herm <= tol and tr <= tol and mineig >= -tol
    return DensityDiagnostics(herm, tr, mineig, ok)


class DensityMatrix:
    """Square complex matrix tagged with an ordered tuple of qubit labels.

    Construction validates Hermiticity, unit trace and positive
    semidefiniteness (the latter two only when ``nonphysical`` is unset; the
    flag exists so that deliberately invalid parameter choices can still be
    propagated through the machinery).  The stored array is read-only.
    """

    __slots__ = ("_mat", "_subsystems", "_nonphysical")

    def __init__(self, mat, subsystems: Sequence[str], *, nonphysical: bool = False):
        m = _as_matrix(mat)
        subs = tuple(subsystems)
        if len(subs) == 0 or len(subs) > MAX_QUBITS:
            raise ValueError(f"need between 1 and {MAX_QUBITS} subsystem labels")
        for s in subs:
            if s not in LABELS:
                raise ValueError(f"unknown subsystem label {s!r}; allowed: {LABELS}")
        if len(set(subs)) != len(subs):
            raise ValueError(f"duplicate subsystem labels in {subs}")
        dim = 2 ** len(subs)
        if m.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {m.shape} does not match {len(subs)} qubits ({dim} x {dim})"
            )
        herm = float(np.abs(m - m.conj().T).max())
        if herm > HERMITIAN_TOL:
            raise PhysicalityError(
                f"density matrix is not Hermitian: residual {herm:.3e}"
            )
        if not nonphysical:
            tr = float(abs(np.trace(m) - 1.0))
            if tr > TRACE_TOL:
                raise PhysicalityError(f"density matrix trace deviates by {tr:.3e}")
            mineig = float(np.linalg.eigvalsh(_hermitize(m))[0])
            if mineig < -PSD_TOL:
                raise PhysicalityError(
                    f"density matrix is not positive semidefinite: "
                    f"minimum eigenvalue {mineig:.6g}",
                    min_eigenvalue=mineig,
                )
        self._mat = m.copy()
        self._mat.flags.writeable = False
        self._subsystems = subs
        self._nonphysical = bool(nonphysical)

    @property
    def mat(self) -> np.ndarray:
        return self._mat

    @property
    def subsystems(self) -> tuple[str, ...]:
        return self._subsystems

    @property
    def nonphysical(self) -> bool:
        return self._nonphysical

    @property
    def n_qubits(self) -> int:
        return len(self._subsystems)

    @property
    def dim(self) -> int:
        return self._mat.shape[0]

    def axis(self, label: str) -> int:
        try:
            return self._subsystems.index(label)
        except ValueError:
            raise ValueError(
                f"label {label!r} not among subsystems {self._subsystems}"
            ) from None

    def __repr__(self) -> str:  # pragma: no cover
        flag = ", nonphysical" if self._nonphysical else ""
        return f"DensityMatrix({'x'.join('2' for _ in self._subsystems)} over {self._subsystems}{flag})"


def _normalize_keep(rho: DensityMatrix, keep: Iterable[str]) -> tuple[str, ...]:
    keep = list(keep)
    if not keep:
        raise ValueError("keep set must be nonempty")
    seen = set()
    for lab in keep:
        if lab not in rho.subsystems:
            raise ValueError(f"label {lab!r} not among subsystems {rho.subsystems}")
        if lab in seen:
            raise ValueError(f"duplicate label {lab!r} in keep set")
        seen.add(lab)
    return tuple(lab for lab in rho.subsystems if lab in seen)


def partial_trace(rho: DensityMatrix, keep: Iterable[str]) -> DensityMatrix:
    """Reduced state over ``keep``, in the order induced by the input."""
    kept = _normalize_keep(rho, keep)
    k = rho.n_qubits
    arr = rho.mat.reshape((2,) * (2 * k))
    rows = list(range(k))
    cols = []
    nxt = k
    for i, lab in enumerate(rho.subsystems):
        if lab in kept:
            cols.append(nxt)
            nxt += 1
        else:
            cols.append(rows[i])  # repeated index: traced out
    out = [rows[i] for i, lab in enumerate(rho.subsystems) if lab in kept]
    out += [cols[i] for i, lab in enumerate(rho.subsystems) if lab in kept]
    res = np.einsum(arr, rows + cols, out)
    m = 2 ** len(kept)
    return DensityMatrix(res.reshape(m, m), kept, nonphysical=rho.nonphysical)


def partial_transpose(rho: DensityMatrix, on: str) -> np.ndarray:
    """Matrix with the row/column indices of subsystem ``on`` transposed."""
    t = rho.axis(on)
    k = rho.n_qubits
    arr = rho.mat.reshape((2,) * (2 * k))
    arr = arr.swapaxes(t, k + t)
    return arr.reshape(rho.dim, rho.dim).copy()


def permute_subsystems(rho: DensityMatrix, order: Sequence[str]) -> DensityMatrix:
    """Same state with subsystems reordered to ``order``."""
    order = tuple(order)
    if set(order) != set(rho.subsystems) or len(order) != rho.n_qubits:
        raise ValueError(f"order {order} is not a permutation of {rho.subsystems}")
    if order == rho.subsystems:
        return rho
    k = rho.n_qubits
    perm = [rho.axis(lab) for lab in order]
    arr = rho.mat.reshape((2,) * (2 * k))
    arr = arr.transpose(perm + [k + i for i in perm])
    return DensityMatrix(
        arr.reshape(rho.dim, rho.dim), order, nonphysical=rho.nonphysical
    )


#: eigenvalues below this are treated as exact zeros inside psd_sqrt; taking
#: the square root of pure rounding noise would otherwise inject sqrt(eps)
#: artifacts into the null space of rank-deficient states
SQRT_FLOOR = 1e-13


def psd_sqrt(rho, *, nonphysical: bool | None = None) -> np.ndarray:
    """Hermitian PSD square root via spectral decomposition.

    Eigenvalues in ``[-PSD_TOL, SQRT_FLOOR)`` are clamped to zero.  Anything
    below ``-PSD_TOL`` raises unless the nonphysical flag is set (explicitly,
    or on the input :class:`DensityMatrix`), in which case all negative
    eigenvalues are clamped and the result is advisory.
    """
    if isinstance(rho, DensityMatrix):
        if nonphysical is None:
            nonphysical = rho.nonphysical
        m = rho.mat
    else:
        m = _as_matrix(rho)
        nonphysical = bool(nonphysical)
    w, v = hermitian_eigenvalues(m, vectors=True)
    if w[0] < -PSD_TOL and not nonphysical:
        raise PhysicalityError(
            f"matrix is not positive semidefinite: minimum eigenvalue {w[0]:.6g}",
            min_eigenvalue=float(w[0]),
        )
    w = np.where(w < SQRT_FLOOR, 0.0, w)
    s = (v * np.sqrt(w)) @ v.conj().T
    return _hermitize(s)
