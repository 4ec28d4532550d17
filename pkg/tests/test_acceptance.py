"""Acceptance suite: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; plain ``pytest`` reports the same tests silently.
"""
import itertools
import json
import math

import numpy as np
import pytest
from helpers import random_valid_xparams

from unruhx import (
    BoundaryQuery,
    ChannelSpec,
    GreekCoeffs,
    GridSpec,
    PhysicalityError,
    SweepConfig,
    XParams,
    apply_unruh,
    audit,
    concurrence,
    evolve_total,
    evolve_total_kraus,
    find_boundary,
    ppt_test,
    preset_params,
    reduce,
    run_sweep,
    write_csv,
    x_state,
)
from unruhx.cli import main as cli_main
from unruhx.sweep import PARTITION_LABELS, measure_point

BELL = preset_params("bell")
R_MAX = math.pi / 4
PRESETS = [
    BELL,
    preset_params("werner:0.9"),
    preset_params("werner:0.8"),
    preset_params("werner:0.7"),
    XParams(0.6, -0.5, 0.3),
]


def full_cfg(params, kind, partitions=tuple(PARTITION_LABELS)):
    return SweepConfig(
        params, kind, GridSpec(0.0, R_MAX, 65), GridSpec(0.0, 1.0, 65), partitions
    )


def passed(num, text):
    print(f"ACCEPTANCE {num:02d} PASS: {text}")


def test_criterion_01_identity_limits():
    for params in PRESETS:
        rho0 = x_state(params)
        for kind in ("amplitude", "phase"):
            total = evolve_total(apply_unruh(rho0, 0.0), ChannelSpec.equal(kind, 0.0))
            red = reduce(total, ("A", "R"))
            assert np.abs(red.mat - rho0.mat).max() <= 1e-12
    conc, _ = measure_point(full_cfg(BELL, "amplitude", ("AR",)), 0.0, 0.0)
    assert conc["AR"] == 1.0
    passed(1, "reduced AR state at (r=0, p=0) is the initial X state; C_AR(Bell) = 1")


def test_criterion_02_unruh_only_bell_curve():
    # oracle: spectral Wootters on the numerically evolved state
    rho0 = x_state(BELL)
    for r in np.linspace(0.0, R_MAX, 33):
        total = evolve_total(apply_unruh(rho0, float(r)), ChannelSpec.equal("amplitude", 0.0))
        c = concurrence(reduce(total, ("A", "R"))).value
        assert abs(c - math.cos(r)) <= 1e-9
    total = evolve_total(apply_unruh(rho0, R_MAX), ChannelSpec.equal("amplitude", 0.0))
    c_max = concurrence(reduce(total, ("A", "R"))).value
    assert c_max == pytest.approx(0.707106781, abs=1e-9)
    passed(2, "C_AR(r, p=0) = cos(r) on 33 points; 0.707106781 at r = pi/4")


def test_criterion_03_amplitude_damping_inertial_bell():
    cfg = full_cfg(BELL, "amplitude", ("AR", "REA", "EAER"))
    for p in np.linspace(0.0, 1.0, 33):
        p = float(p)
        q = 1.0 - p
        conc, _ = measure_point(cfg, 0.0, p)
        assert abs(conc["AR"] - q * q) <= 1e-9
        assert abs(conc["EAER"] - p * p) <= 1e-9
        spq = math.sqrt(p * q)
        assert abs(conc["REA"] - spq * (1 - spq)) <= 1e-9
    start, _ = measure_point(cfg, 0.0, 0.0)
    assert (start["AR"], start["EAER"], start["REA"]) == (1.0, 0.0, 0.0)
    end, _ = measure_point(cfg, 0.0, 1.0)
    assert end["AR"] <= 1e-12
    assert end["EAER"] == pytest.approx(1.0, abs=1e-12)
    assert end["REA"] <= 1e-12
    passed(3, "inertial Bell amplitude damping: C_AR=(1-p)^2, C_EaEr=p^2, C_REa=sqrt(pq)(1-sqrt(pq))")


def test_criterion_04_sudden_death_boundary():
    cfg = full_cfg(BELL, "amplitude")
    at_rmax = find_boundary(cfg, BoundaryQuery("SD", "AR", "p", R_MAX))
    assert at_rmax.value == pytest.approx(0.5, abs=1e-6)
    # at r=0 the concurrence (1-p)^2 crosses zero_tol at 1 - sqrt(1e-9);
    # with axis_tol 1e-6 the reported edge boundary sits within 5e-5 of 1
    at_zero = find_boundary(cfg, BoundaryQuery("SD", "AR", "p", 0.0))
    assert at_zero.value is not None
    assert abs(at_zero.value - 1.0) <= 5e-5
    stars = [
        find_boundary(cfg, BoundaryQuery("SD", "AR", "p", r)).value
        for r in (0.0, math.pi / 8, R_MAX)
    ]
    assert stars[0] >= stars[1] >= stars[2]
    passed(4, "SD(p*): 0.5 at r=pi/4, edge ~1 at r=0, non-increasing in r")


def test_criterion_05_sudden_birth_behavior():
    cfg = full_cfg(BELL, "amplitude")
    stars = [
        find_boundary(cfg, BoundaryQuery("SB", "EAER", "p", r)).value
        for r in (0.0, math.pi / 8, R_MAX)
    ]
    assert all(s is not None for s in stars)
    assert stars[0] <= stars[1] <= stars[2]
    # entangled for all p > 0 at r = 0 (within zero_tol resolution)
    assert stars[0] <= 5e-5
    passed(5, "SB(p*) for EaEr non-decreasing in r; onset at p ~ 0 for r = 0")


def test_criterion_06_kraus_equals_dilation():
    rng = np.random.default_rng(1234)
    grid = [(r, p) for r in np.linspace(0, R_MAX, 5) for p in np.linspace(0, 1, 5)]
    for _ in range(20):
        params = random_valid_xparams(rng)
        rho0 = x_state(params)
        for kind in ("amplitude", "phase"):
            for r, p in grid:
                rho_r = apply_unruh(rho0, float(r))
                spec = ChannelSpec.equal(kind, float(p))
                t_dilation = evolve_total(rho_r, spec)
                t_kraus = evolve_total_kraus(rho_r, spec)
                for labels in PARTITION_LABELS.values():
                    d = np.abs(
                        reduce(t_dilation, labels).mat - reduce(t_kraus, labels).mat
                    ).max()
                    assert d <= 1e-12
    passed(6, "Kraus path == dilation path on all six reductions (20 states x 25 grid points x 2 channels)")


def test_criterion_07_phase_damping_separability():
    states = [BELL, preset_params("werner:0.8"), XParams(0.6, -0.5, 0.3)]
    for params in states:
        rho0 = x_state(params)
        for r in np.linspace(0.0, R_MAX, 17):
            rho_r = apply_unruh(rho0, float(r))
            for p in np.linspace(0.0, 1.0, 17):
                total = evolve_total(rho_r, ChannelSpec.equal("phase", float(p)))
                for pid in ("RER", "REA", "EAER"):
                    res = ppt_test(reduce(total, PARTITION_LABELS[pid]))
                    assert res.min_eigenvalue >= -1e-10
    passed(7, "phase damping: RER, REA, EaEr are PPT on a 17x17 grid for 3 initial states")


def test_criterion_08_phase_damping_bell():
    cfg = full_cfg(BELL, "phase", ("AR",))
    for r in np.linspace(0.0, R_MAX, 17):
        for p in np.linspace(0.0, 1.0, 17):
            conc, _ = measure_point(cfg, float(r), float(p))
            assert abs(conc["AR"] - (1 - p) * math.cos(r)) <= 1e-9
    for r in (0.0, 0.4, 0.7):
        res = find_boundary(cfg, BoundaryQuery("SD", "AR", "p", r))
        assert res.value is None
    passed(8, "phase Bell: C_AR = (1-p)cos(r) on the grid; no SD for p < 1")


def test_criterion_09_errata_audit():
    r, p = 0.5, 0.25
    for params in (BELL, preset_params("werner:0.8")):
        report = audit(params, r, p)
        mism = report.entry_mismatches()
        assert {(m.equation_id, m.entry) for m in mism} == {
            ("r1ad", (1, 1)),
            ("a3ad", (4, 4)),
        }
        g = GreekCoeffs.from_params(params, r, p)
        r1 = next(m for m in mism if m.equation_id == "r1ad")
        assert abs(r1.residual - p * math.sin(r) ** 2 / 2) <= 1e-9
        a3 = next(m for m in mism if m.equation_id == "a3ad")
        assert abs(a3.residual - g.beta * p * (1 - p) / 4) <= 1e-9
        claim = next(rec for rec in report.claims() if "R/ER concurrence" in rec.note)
        assert claim.status == "mismatch"
        assert claim.numeric_value > 0
    spot = audit(BELL, 0.0, 0.25, channel_kind="amplitude")
    claim = next(rec for rec in spot.claims() if "R/ER concurrence" in rec.note)
    assert claim.numeric_value == pytest.approx(0.433012702, abs=1e-9)
    passed(9, "audit: exactly the r1ad(1,1) and a3ad(4,4) mismatches; C_REr spot value 0.433012702")


def test_criterion_09_verify_command(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = cli_main(
        ["verify", "--preset", "bell", "--r", "0.5", "--p", "0.25", "--out", str(out_path)]
    )
    capsys.readouterr()
    assert code == 0
    doc = json.loads(out_path.read_text())
    mism = [r for r in doc if r["entry"] is not None and r["status"] == "mismatch"]
    assert {(r["equation_id"], tuple(r["entry"])) for r in mism} == {
        ("r1ad", (1, 1)),
        ("a3ad", (4, 4)),
    }
    assert abs(mism[0]["residual"] - 0.25 * math.sin(0.5) ** 2 / 2) <= 1e-9 or abs(
        mism[1]["residual"] - 0.25 * math.sin(0.5) ** 2 / 2
    ) <= 1e-9
    claim = next(r for r in doc if "R/ER concurrence" in r["note"])
    assert claim["status"] == "mismatch"
    assert claim["numeric_value"] > 0
    passed(9, "verify command reports the same two mismatches and the inconsistent claim, exit 0")


def test_criterion_10_werner_persistence():
    c, p, r = 0.8, 0.3, R_MAX
    q = 1.0 - p
    s, cr = math.sin(r) ** 2, math.cos(r)
    beta = (1 + c) + s * (1 - c)
    gamma = (1 - c) + s * (1 + c)
    eps = (1 - c) * cr * cr
    oracle = (q / 2) * (2 * c * cr - math.sqrt((gamma + beta * p) * (eps + beta * p)))
    conc, _ = measure_point(full_cfg(preset_params("werner:0.8"), "amplitude", ("AR",)), r, p)
    assert abs(conc["AR"] - oracle) <= 1e-9
    assert conc["AR"] > 0
    # closed form evaluates to 0.0257565540, confirming persistence at the
    # infinite-acceleration limit (the criterion's printed 0.025723 is an
    # arithmetic slip in its own cited formula; see the decisions ledger)
    assert conc["AR"] == pytest.approx(0.0257565540, abs=1e-5)
    passed(10, "Werner(0.8) persistence: C_AR(p=0.3, r=pi/4) = 0.02575655 > 0")


def test_criterion_11_physicality_rejection(tmp_path, capsys):
    for signs in itertools.product((1, -1), repeat=3):
        params = XParams(0.7 * signs[0], 0.9 * signs[1], 0.4 * signs[2])
        with pytest.raises(PhysicalityError) as err:
            x_state(params)
        assert err.value.min_eigenvalue == pytest.approx(-0.05, abs=1e-12)
    code = cli_main(
        ["evolve", "--c1", "0.7", "--c2", "0.9", "--c3", "0.4", "--r", "0.1",
         "--p", "0.1", "--channel", "amplitude", "--partition", "AR"]
    )
    captured = capsys.readouterr()
    assert code == 2
    assert "-0.05" in captured.err
    # with the flag: sweeps complete and outputs carry the nonphysical label
    cfg = SweepConfig(
        XParams(0.7, 0.9, 0.4),
        "amplitude",
        GridSpec(0.0, R_MAX, 3),
        GridSpec(0.0, 1.0, 3),
        allow_nonphysical=True,
    )
    table = run_sweep(cfg)
    assert table.nonphysical
    csv_path = tmp_path / "nonphys.csv"
    write_csv(table, csv_path)
    assert csv_path.read_text().startswith("# allow_nonphysical: true\n")
    code = cli_main(
        ["evolve", "--c1", "0.7", "--c2", "0.9", "--c3", "0.4", "--r", "0.1",
         "--p", "0.1", "--channel", "amplitude", "--partition", "AR",
         "--allow-nonphysical", "--json"]
    )
    captured = capsys.readouterr()
    assert code == 0
    assert json.loads(captured.out)["nonphysical"] is True
    passed(11, "(0.7, 0.9, 0.4) rejected at -0.05 under every sign assignment; flag completes with labels")
