"""Two-qubit entanglement measures: Wootters concurrence and the PPT test.

Concurrence: C = max{0, l1 - l2 - l3 - l4} where the l_i are the square
roots of the eigenvalues of rho * rho_tilde and
rho_tilde = (sy x sy) rho^* (sy x sy).  The spectrum is evaluated through
the Hermitian form sqrt(rho) rho_tilde sqrt(rho), which avoids any
non-Hermitian eigenproblem.

For X-shaped matrices there is a closed-form shortcut,
C = 2 max{0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)}.

PPT (Peres-Horodecki): for two qubits, a state is separable iff its partial
transpose is positive semidefinite, so the minimum eigenvalue of the partial
transpose is a complete separability test here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmat import DensityMatrix, partial_transpose, psd_sqrt

__all__ = [
    "ConcurrenceResult",
    "PptResult",
    "concurrence",
    "concurrence_x",
    "is_x_type",
    "ppt_test",
]

_YY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)  # sigma_y x sigma_y

# positions that must vanish for an X-shaped 4x4 matrix
_OFF_X = [(0, 1), (0, 2), (1, 0), (2, 0), (1, 3), (3, 1), (2, 3), (3, 2)]


@dataclass(frozen=True)
class ConcurrenceResult:
    value: float
    lambdas: tuple
    method: str


@dataclass(frozen=True)
class PptResult:
    min_eigenvalue: float
    negativity: float
    verdict: str  # "entangled" | "ppt"


def _require_two_qubits(rho: DensityMatrix):
    if rho.n_qubits != 2 or rho.dim != 4:
        raise ValueError(f"expected a 2-qubit (4x4) state, got {rho.subsystems}")


def concurrence(rho: DensityMatrix) -> ConcurrenceResult:
    """Wootters concurrence by the spectral route (any 2-qubit state).

    The l_i are evaluated as the singular values of sqrt(rho) sqrt(rho_tilde),
    whose squares are the eigenvalues of the Hermitian matrix
    sqrt(rho) rho_tilde sqrt(rho); the SVD form avoids the precision loss of
    square-rooting near-zero eigenvalues on rank-deficient states.  For a
    nonphysical (flagged) input the PSD checks are bypassed, negative
    eigenvalues are clamped, and the value is advisory.
    """
    _require_two_qubits(rho)
    s = psd_sqrt(rho)
    rho_tilde = _YY @ rho.mat.conj() @ _YY
    s_tilde = psd_sqrt(rho_tilde, nonphysical=rho.nonphysical)
    lam = np.sort(np.linalg.svd(s @ s_tilde, compute_uv=False))[::-1]
    value = max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))
    return ConcurrenceResult(value, tuple(float(x) for x in lam), "spectral")


def is_x_type(rho, tol: float = 1e-10) -> bool:
    """True iff every entry off the main and anti-diagonal has modulus < tol."""
    m = rho.mat if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    return max(abs(m[i, j]) for i, j in _OFF_X) < tol


def concurrence_x(rho: DensityMatrix) -> ConcurrenceResult:
    """Concurrence of an X-shaped state via the closed-form shortcut."""
    _require_two_qubits(rho)
    if not is_x_type(rho, 1e-10):
        raise ValueError(
            "state is not X-shaped; use the spectral concurrence() instead"
        )
    m = rho.mat
    d = np.clip(np.real(np.diag(m)), 0.0, None)
    a14 = abs(m[0, 3])
    a23 = abs(m[1, 2])
    r2233 = math.sqrt(d[1] * d[2])
    r1144 = math.sqrt(d[0] * d[3])
    value = 2.0 * max(0.0, a14 - r2233, a23 - r1144)
    lam = sorted(
        (r1144 + a14, abs(r1144 - a14), r2233 + a23, abs(r2233 - a23)), reverse=True
    )
    return ConcurrenceResult(float(value), tuple(float(x) for x in lam), "x_shortcut")


def ppt_test(rho: DensityMatrix, tol: float = 1e-10) -> PptResult:
    """Peres test: spectrum of the partial transpose on the second subsystem.

    negativity sums |eigenvalue| over eigenvalues below -tol, so
    negativity == 0 exactly when min_eigenvalue >= -tol.
    """
    _require_two_qubits(rho)
    pt = partial_transpose(rho, rho.subsystems[1])
    w = np.linalg.eigvalsh((pt + pt.conj().T) / 2.0)
    mineig = float(w[0])
    neg = float(np.abs(w[w < -tol]).sum())
    verdict = "entangled" if mineig < -tol else "ppt"
    return PptResult(mineig, neg, verdict)
