"""Shared test utilities: random states, independent oracles."""
import numpy as np

from unruhx import DensityMatrix, XParams


def random_valid_xparams(rng) -> XParams:
    """Rejection-sample a PSD correlation triple."""
    while True:
        c = rng.uniform(-1.0, 1.0, 3)
        params = XParams(*c)
        if params.is_valid():
            return params


def random_psd(rng, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_density(rng, labels) -> DensityMatrix:
    return DensityMatrix(random_psd(rng, 2 ** len(labels)), labels)


def random_unitary(rng, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def charpoly_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Eigenvalues via Newton's identities and polynomial root finding.

    Independent of any eigensolver; used as a brute-force oracle for small
    Hermitian matrices.
    """
    n = m.shape[0]
    power_sums = [float(np.trace(np.linalg.matrix_power(m, k)).real) for k in range(1, n + 1)]
    elem = [1.0]
    for k in range(1, n + 1):
        s = 0.0
        for i in range(1, k + 1):
            s += (-1) ** (i - 1) * elem[k - i] * power_sums[i - 1]
        elem.append(s / k)
    coeffs = [(-1) ** k * elem[k] for k in range(n + 1)]
    return np.sort(np.roots(coeffs).real)


def bell_phi_plus() -> DensityMatrix:
    v = np.zeros(4)
    v[0] = v[3] = 1 / np.sqrt(2)
    return DensityMatrix(np.outer(v, v), ("A", "R"))
