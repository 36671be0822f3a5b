import numpy as np
import pytest

import entfid.scenario as scen
from entfid.metrics import OptimizerConfig
from entfid.scenario import (ScenarioPoint, SweepConfig, SweepError, analytic_concurrence,
                             analytic_ef, analytic_mef, evolved_state, scenario_channel,
                             scenario_hamiltonian, scenario_unitary, sweep)
from entfid.states import bell_state, purity


def test_hamiltonian_vanishes_at_zero_coupling():
    assert np.max(np.abs(scenario_hamiltonian(0.0))) == 0.0


def test_hamiltonian_matrix():
    h = scenario_hamiltonian(1.0)
    assert np.allclose(h, np.diag([0.5, -0.5, -0.5, 0.5]), atol=0)
    assert np.array_equal(h, h.conj().T)


def test_unitary_at_zero_is_identity():
    u = scenario_unitary(ScenarioPoint(0.0))
    assert np.max(np.abs(u - np.eye(4))) < 1e-14


def test_unitary_at_half_period():
    u = scenario_unitary(ScenarioPoint(np.pi))
    assert np.max(np.abs(u - np.diag([-1j, 1j, 1j, -1j]))) < 1e-12


def test_unitary_is_unitary():
    u = scenario_unitary(ScenarioPoint(2.31))
    assert np.max(np.abs(u @ u.conj().T - np.eye(4))) < 1e-12


def test_channel_has_two_diagonal_operators():
    ch = scenario_channel(ScenarioPoint(0.77))
    assert len(ch.operators) == 2
    for op in ch.operators:
        # each operator is sqrt(1/2) times a z-axis rotation
        assert abs(op[0, 1]) == 0.0 and abs(op[1, 0]) == 0.0
        assert abs(abs(op[0, 0]) - np.sqrt(0.5)) < 1e-12
        assert abs(op[0, 0] * op[1, 1] - 0.5) < 1e-12  # opposite phases


def test_evolved_state_at_zero_is_input():
    for sign in "+-":
        rho = evolved_state(ScenarioPoint(0.0, sign))
        assert np.max(np.abs(rho.matrix - bell_state(sign).matrix)) < 1e-14


def test_evolved_state_at_half_period_flips_bell_state():
    rho = evolved_state(ScenarioPoint(np.pi, "+"))
    assert np.max(np.abs(rho.matrix - bell_state("-").matrix)) < 1e-12


def test_evolved_state_at_quarter_period_is_even_mixture():
    rho = evolved_state(ScenarioPoint(np.pi / 2, "+"))
    want = 0.5 * bell_state("+").matrix + 0.5 * bell_state("-").matrix
    assert np.max(np.abs(rho.matrix - want)) < 1e-12
    assert purity(rho) == pytest.approx(0.5, abs=1e-12)


def test_evolved_state_matches_mixture_formula():
    """rho'(t) = cos^2(lt/2) rho_+ + sin^2(lt/2) rho_- for the + input."""
    for lt in np.linspace(0.0, 2 * np.pi, 17):
        rho = evolved_state(ScenarioPoint(float(lt), "+"))
        c2 = np.cos(lt / 2) ** 2
        want = c2 * bell_state("+").matrix + (1 - c2) * bell_state("-").matrix
        assert np.max(np.abs(rho.matrix - want)) < 1e-12


def test_analytic_curves():
    assert analytic_concurrence(0.0) == 1.0
    assert analytic_concurrence(np.pi / 2) == pytest.approx(0.0, abs=1e-15)
    assert analytic_concurrence(np.pi) == pytest.approx(1.0)
    assert analytic_ef(0.0) == 1.0
    assert analytic_ef(np.pi) == pytest.approx(0.0, abs=1e-30)
    assert analytic_mef(np.pi / 2) == pytest.approx(0.5)
    assert analytic_mef(np.pi) == pytest.approx(1.0)
    assert analytic_mef(2 * np.pi) == pytest.approx(1.0)


def test_analytic_mef_is_max_of_branches():
    for lt in np.linspace(0.0, 2 * np.pi, 40):
        c2 = np.cos(lt / 2) ** 2
        assert analytic_mef(float(lt)) == pytest.approx(max(c2, 1 - c2), abs=1e-15)


def test_point_validation():
    with pytest.raises(ValueError, match="finite"):
        ScenarioPoint(np.inf)
    with pytest.raises(ValueError, match="sign"):
        ScenarioPoint(1.0, "x")


def test_sweep_config_validation():
    with pytest.raises(ValueError, match="finite"):
        SweepConfig(lambda_t_min=np.nan)
    with pytest.raises(ValueError, match="lambda_t_min"):
        SweepConfig(lambda_t_min=2.0, lambda_t_max=1.0)
    with pytest.raises(ValueError, match="steps"):
        SweepConfig(steps=0)
    with pytest.raises(ValueError, match="sign"):
        SweepConfig(sign="plus")


def test_sweep_single_point():
    rows = sweep(SweepConfig(lambda_t_min=np.pi, lambda_t_max=np.pi, steps=1))
    assert len(rows) == 1
    row = rows[0]
    assert row.lambda_t == np.pi
    assert row.concurrence == pytest.approx(1.0, abs=1e-9)
    assert abs(row.ef) < 1e-9
    assert row.mef_numeric == pytest.approx(1.0, abs=1e-6)
    assert row.mef_analytic == pytest.approx(1.0)
    assert abs(row.ef_direct) < 1e-9


def test_sweep_residuals_against_analytic_curves():
    cfg = SweepConfig(steps=97, optimizer=OptimizerConfig(grid_points_per_angle=12))
    rows = sweep(cfg)
    assert [r.lambda_t for r in rows] == sorted(r.lambda_t for r in rows)
    worst = 0.0
    for r in rows:
        worst = max(worst,
                    abs(r.concurrence - analytic_concurrence(r.lambda_t)),
                    abs(r.ef - analytic_ef(r.lambda_t)),
                    abs(r.ef_direct - analytic_ef(r.lambda_t)),
                    abs(r.mef_numeric - r.mef_analytic))
    assert worst < 1e-6


def test_sweep_sign_rows_are_identical():
    """The channel ignores the sign; both Bell inputs give byte-equal rows."""
    plus = sweep(SweepConfig(steps=41, sign="+"))
    minus = sweep(SweepConfig(steps=41, sign="-"))
    for a, b in zip(plus, minus):
        assert a == b


def test_periodicity():
    for lt in (0.3, 1.1, 2.9):
        base = sweep(SweepConfig(lambda_t_min=lt, lambda_t_max=lt, steps=1))[0]
        shifted = sweep(SweepConfig(lambda_t_min=lt + 2 * np.pi,
                                    lambda_t_max=lt + 2 * np.pi, steps=1))[0]
        assert abs(base.concurrence - shifted.concurrence) < 1e-9
        assert abs(base.ef - shifted.ef) < 1e-9
        assert abs(base.mef_numeric - shifted.mef_numeric) < 1e-9


def test_sweep_wraps_metric_failures(monkeypatch):
    def boom(*args, **kwargs):
        raise ArithmeticError("synthetic failure")

    monkeypatch.setattr(scen, "concurrence", boom)
    with pytest.raises(SweepError) as err:
        sweep(SweepConfig(lambda_t_min=1.5, lambda_t_max=1.5, steps=1))
    assert err.value.lambda_t == 1.5
    assert "synthetic failure" in str(err.value)
