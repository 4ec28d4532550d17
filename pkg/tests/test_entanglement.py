import math

import numpy as np
import pytest
from helpers import bell_phi_plus, random_density, random_psd, random_unitary, random_valid_xparams

from unruhx import (
    ChannelSpec,
    DensityMatrix,
    XParams,
    apply_unruh,
    concurrence,
    concurrence_x,
    evolve_total,
    is_x_type,
    kron,
    ppt_test,
    reduce,
    x_state,
)

YY = np.kron(
    np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]])
).real.astype(complex)

STATES = [XParams(1, -1, 1), XParams(0.8, -0.8, 0.8), XParams(0.6, -0.5, 0.3)]


def evolved_reduction(params, kind, r, p, labels):
    total = evolve_total(apply_unruh(x_state(params), r), ChannelSpec.equal(kind, p))
    return reduce(total, labels)


class TestConcurrence:
    def test_bell_is_one(self):
        res = concurrence(bell_phi_plus())
        assert res.value == pytest.approx(1.0, abs=1e-12)
        assert res.method == "spectral"

    def test_product_states_vanish(self, rng):
        for _ in range(5):
            dm = DensityMatrix(kron(random_psd(rng, 2), random_psd(rng, 2)), ("A", "R"))
            assert concurrence(dm).value <= 1e-9

    def test_mixed_example_sqrt3_over_4(self):
        # 0.5|00><00| + 0.5|psi><psi| with |psi> = sqrt(p)|01> + sqrt(q)|10>, p = 1/4;
        # X spectrum gives C = sqrt(pq) = sqrt(3)/4 (frozen from the direct
        # rho*rho_tilde eigenvalue oracle)
        p, q = 0.25, 0.75
        psi = np.array([0, math.sqrt(p), math.sqrt(q), 0])
        m = np.zeros((4, 4))
        m[0, 0] = 0.5
        m = m + 0.5 * np.outer(psi, psi)
        dm = DensityMatrix(m, ("A", "R"))
        for res in (concurrence(dm), concurrence_x(dm)):
            assert res.value == pytest.approx(0.4330127018922193, abs=1e-12)

    def test_wrong_dimension_rejected(self, rng):
        with pytest.raises(ValueError, match="2-qubit"):
            concurrence(random_density(rng, ("A", "R", "EA")))

    def test_lambda_identity_spectral(self, rng):
        # sum of lambda_i^2 equals trace(rho rho_tilde)
        for _ in range(10):
            dm = random_density(rng, ("A", "R"))
            res = concurrence(dm)
            lhs = sum(x * x for x in res.lambdas)
            rhs = np.trace(dm.mat @ (YY @ dm.mat.conj() @ YY)).real
            assert lhs == pytest.approx(rhs, abs=1e-9)
        assert res.value == pytest.approx(
            max(0.0, res.lambdas[0] - sum(res.lambdas[1:])), abs=1e-12
        )

    def test_local_unitary_invariance(self, rng):
        for _ in range(50):
            dm = random_density(rng, ("A", "R"))
            u = kron(random_unitary(rng, 2), random_unitary(rng, 2))
            rotated = DensityMatrix(u @ dm.mat @ u.conj().T, ("A", "R"))
            assert abs(concurrence(rotated).value - concurrence(dm).value) <= 1e-9


class TestConcurrenceX:
    def test_amplitude_bell_r0(self, rng):
        for p in rng.uniform(0, 1, 8):
            red = evolved_reduction(XParams(1, -1, 1), "amplitude", 0.0, float(p), ("A", "R"))
            res = concurrence_x(red)
            assert res.value == pytest.approx((1 - p) ** 2, abs=1e-12)
            assert res.method == "x_shortcut"

    def test_phase_bell(self, rng):
        for _ in range(8):
            r, p = float(rng.uniform(0, math.pi / 4)), float(rng.uniform(0, 1))
            red = evolved_reduction(XParams(1, -1, 1), "phase", r, p, ("A", "R"))
            assert concurrence_x(red).value == pytest.approx((1 - p) * math.cos(r), abs=1e-12)

    def test_diagonal_state_vanishes(self, rng):
        probs = rng.dirichlet(np.ones(4))
        dm = DensityMatrix(np.diag(probs.astype(complex)), ("A", "R"))
        assert concurrence_x(dm).value == 0.0

    def test_non_x_rejected_with_pointer(self, rng):
        red = evolved_reduction(XParams(1, -1, 1), "phase", 0.5, 0.5, ("R", "EA"))
        assert not is_x_type(red, 1e-10)
        with pytest.raises(ValueError, match="spectral"):
            concurrence_x(red)

    def test_matches_spectral_on_sweep_grid(self):
        for params in STATES:
            rho0 = x_state(params)
            for kind in ("amplitude", "phase"):
                for r in np.linspace(0, math.pi / 4, 6):
                    rho_r = apply_unruh(rho0, float(r))
                    for p in np.linspace(0, 1, 6):
                        total = evolve_total(rho_r, ChannelSpec.equal(kind, float(p)))
                        for labels in [
                            ("A", "R"),
                            ("A", "EA"),
                            ("A", "ER"),
                            ("R", "ER"),
                            ("R", "EA"),
                            ("EA", "ER"),
                        ]:
                            red = reduce(total, labels)
                            if not is_x_type(red, 1e-10):
                                continue
                            dx = concurrence_x(red).value
                            ds = concurrence(red).value
                            assert abs(dx - ds) <= 1e-9


class TestIsXType:
    def test_x_state_true(self, rng):
        assert is_x_type(x_state(random_valid_xparams(rng)))

    def test_maximally_mixed_true(self):
        assert is_x_type(np.eye(4) / 4)

    def test_phase_rea_reduction_false(self):
        red = evolved_reduction(XParams(1, -1, 1), "phase", 0.4, 0.3, ("EA", "R"))
        assert not is_x_type(red, 1e-10)
        # in the (EA, R) layout the coherences sit at (1,3) and (2,4)
        assert abs(red.mat[0, 2]) > 1e-3 or abs(red.mat[1, 3]) > 1e-3
        # the (R, EA) ordering is equally non-X
        assert not is_x_type(
            evolved_reduction(XParams(1, -1, 1), "phase", 0.4, 0.3, ("R", "EA")), 1e-10
        )


class TestPpt:
    def test_bell_entangled(self):
        res = ppt_test(bell_phi_plus())
        assert res.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)
        assert res.negativity == pytest.approx(0.5, abs=1e-12)
        assert res.verdict == "entangled"

    def test_product_ppt(self, rng):
        dm = DensityMatrix(kron(random_psd(rng, 2), random_psd(rng, 2)), ("A", "R"))
        res = ppt_test(dm)
        assert res.verdict == "ppt"
        assert res.negativity == 0.0

    def test_phase_env_env_separable(self):
        red = evolved_reduction(XParams(1, -1, 1), "phase", 0.5, 0.5, ("EA", "ER"))
        res = ppt_test(red)
        assert res.min_eigenvalue >= -1e-10
        assert res.verdict == "ppt"

    def test_negativity_zero_iff_ppt(self, rng):
        for _ in range(20):
            dm = random_density(rng, ("A", "R"))
            res = ppt_test(dm)
            assert (res.negativity == 0.0) == (res.min_eigenvalue >= -1e-10)

    def test_peres_horodecki_both_directions(self, rng):
        # at 2x2, PPT <=> separable <=> zero concurrence
        checked_entangled = 0
        for _ in range(40):
            dm = random_density(rng, ("A", "R"))
            c = concurrence(dm).value
            res = ppt_test(dm)
            if c > 1e-7:
                assert res.verdict == "entangled"
                checked_entangled += 1
            if res.verdict == "ppt":
                assert c <= 1e-7
        assert checked_entangled > 0

    def test_sweep_states_consistency(self, rng):
        for _ in range(10):
            params = random_valid_xparams(rng)
            kind = "amplitude" if rng.uniform() < 0.5 else "phase"
            r, p = float(rng.uniform(0, math.pi / 4)), float(rng.uniform(0, 1))
            red = evolved_reduction(params, kind, r, p, ("A", "R"))
            c = concurrence(red).value
            res = ppt_test(red)
            if c > 1e-7:
                assert res.verdict == "entangled"
            if res.verdict == "ppt":
                assert c <= 1e-7
