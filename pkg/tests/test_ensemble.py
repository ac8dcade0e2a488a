import numpy as np
import pytest

from entrunc import (
    DimensionError,
    RngStream,
    SweepConfig,
    UnitaryKind,
    loss_sweep,
    run_cell,
    run_ensemble,
)

from oracles import SCHMIDT_N201_S101, TINY_ENSEMBLE


# --- configuration validation ----------------------------------------------


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=8, m_values=(3,), s_values=(3,)),
        dict(n=21, m_values=(), s_values=(3,)),
        dict(n=21, m_values=(1,), s_values=(3,)),
        dict(n=21, m_values=(5, 3), s_values=(3,)),
        dict(n=21, m_values=(3, 3), s_values=(3,)),
        dict(n=21, m_values=(3,), s_values=(4,)),
        dict(n=21, m_values=(3,), s_values=(23,)),
        dict(n=21, m_values=(3,), s_values=(3,), realizations=0),
        dict(n=21, m_values=(3,), s_values=(3,), master_seed=-1),
    ],
)
def test_config_rejects_bad_input(kwargs):
    with pytest.raises(DimensionError):
        SweepConfig(**kwargs)


def test_config_coerces_lists_to_tuples():
    config = SweepConfig(n=9, m_values=[2, 3], s_values=[3, 5])
    assert config.m_values == (2, 3)
    assert config.s_values == (3, 5)


# --- single cells -----------------------------------------------------------


def test_uniform_cell_full_encoding_gives_K_equal_s():
    row = run_cell(21, 21, (3, 9, 15, 21), UnitaryKind.UNIFORM_SPREADING)
    for s, k, w in row:
        assert k == pytest.approx(s, abs=1e-9)
        assert w == pytest.approx(s / 21, abs=1e-12)


def test_uniform_cell_m2_revival_near_half_n():
    (_, k, _), = run_cell(201, 2, (101,), UnitaryKind.UNIFORM_SPREADING)
    assert k == pytest.approx(SCHMIDT_N201_S101, rel=1e-8)
    assert abs(k - 2.0) / 2.0 < 0.01


@pytest.mark.parametrize("m", [2, 7, 15])
def test_random_cell_full_window_gives_K_equal_m(m):
    row = run_cell(15, m, (15,), UnitaryKind.RANDOM_CUE, RngStream(5))
    (_, k, w), = row
    assert k == pytest.approx(m, abs=1e-8)
    assert w == pytest.approx(1.0, abs=1e-12)


def test_random_cell_requires_stream():
    with pytest.raises(ValueError, match="stream"):
        run_cell(9, 3, (3,), UnitaryKind.RANDOM_CUE)


def test_shared_unitary_differs_from_independent():
    base = RngStream(11)
    (_, k_ind, _), = run_cell(9, 3, (5,), UnitaryKind.RANDOM_CUE, base, independent_ab=True)
    (_, k_shr, _), = run_cell(9, 3, (5,), UnitaryKind.RANDOM_CUE, base, independent_ab=False)
    assert k_ind != k_shr


# --- frozen reference ensemble ---------------------------------------------


def tiny_config(**overrides):
    t = TINY_ENSEMBLE
    kwargs = dict(
        n=t["n"],
        m_values=(t["m"],),
        s_values=t["s_values"],
        unitary_kind=UnitaryKind.RANDOM_CUE,
        realizations=t["realizations"],
        master_seed=t["master_seed"],
    )
    kwargs.update(overrides)
    return SweepConfig(**kwargs)


def test_frozen_per_realization_values():
    t = TINY_ENSEMBLE
    base = RngStream(t["master_seed"])
    for j in range(t["realizations"]):
        row = run_cell(t["n"], t["m"], t["s_values"], UnitaryKind.RANDOM_CUE, base.child(j))
        for s, k, w in row:
            assert k == pytest.approx(t["k_per_realization"][s][j], rel=1e-12)
            assert w == pytest.approx(t["weight_per_realization"][s][j], rel=1e-12)


def test_frozen_ensemble_statistics():
    t = TINY_ENSEMBLE
    stats = run_ensemble(tiny_config())
    np.testing.assert_allclose(stats.mean_K[0], t["mean_K"], rtol=1e-12)
    np.testing.assert_allclose(stats.std_K[0], t["std_K"], rtol=1e-12)
    np.testing.assert_allclose(stats.mean_captured_weight[0], t["mean_captured_weight"], rtol=1e-12)
    for j, s in enumerate(t["s_values"]):
        mean_k, std_k, mean_w = stats.cell(t["m"], s)
        assert mean_k == pytest.approx(t["mean_K"][j], rel=1e-12)
        assert std_k == pytest.approx(t["std_K"][j], rel=1e-12)
        assert mean_w == pytest.approx(t["mean_captured_weight"][j], rel=1e-12)


def test_cell_accessor_rejects_unknown_coordinates():
    stats = run_ensemble(tiny_config())
    with pytest.raises(ValueError):
        stats.cell(7, 3)


# --- determinism ------------------------------------------------------------


def test_reruns_are_bit_identical():
    a = run_ensemble(tiny_config())
    b = run_ensemble(tiny_config())
    assert np.array_equal(a.mean_K, b.mean_K)
    assert np.array_equal(a.std_K, b.std_K)
    assert np.array_equal(a.mean_captured_weight, b.mean_captured_weight)


def test_worker_count_does_not_change_results():
    config = SweepConfig(
        n=11, m_values=(2, 5), s_values=(3, 7, 11), realizations=12, master_seed=40
    )
    serial = run_ensemble(config, workers=1)
    threaded = run_ensemble(config, workers=3)
    assert np.array_equal(serial.mean_K, threaded.mean_K)
    assert np.array_equal(serial.std_K, threaded.std_K)
    assert np.array_equal(serial.mean_captured_weight, threaded.mean_captured_weight)


def test_uniform_sweep_is_deterministic_single_shot():
    config = SweepConfig(
        n=9,
        m_values=(2, 3, 9),
        s_values=(3, 5, 7),
        unitary_kind=UnitaryKind.UNIFORM_SPREADING,
        realizations=50,  # ignored for the deterministic kind
    )
    stats = run_ensemble(config)
    assert stats.realizations == 1
    assert np.all(stats.std_K == 0.0)


# --- statistical behaviour --------------------------------------------------


def test_mean_K_nondecreasing_in_window_size():
    config = SweepConfig(
        n=51, m_values=(5,), s_values=tuple(range(3, 52, 2)), realizations=100, master_seed=7
    )
    stats = run_ensemble(config)
    assert np.all(np.diff(stats.mean_K[0]) > 0)


def test_relative_spread_shrinks_with_encoding_dimension():
    config = SweepConfig(
        n=51, m_values=(5, 25), s_values=tuple(range(3, 52, 2)), realizations=100, master_seed=7
    )
    stats = run_ensemble(config)
    rel = stats.std_K / stats.mean_K
    assert rel[1].mean() < rel[0].mean()


def test_uniform_monotone_except_small_even_encodings():
    s_values = tuple(range(3, 22, 2))
    for m in (3, 5, 6, 7):
        stats = run_ensemble(
            SweepConfig(n=21, m_values=(m,), s_values=s_values, unitary_kind=UnitaryKind.UNIFORM_SPREADING)
        )
        assert np.all(np.diff(stats.mean_K[0]) > -1e-9), f"m={m} should be non-decreasing"
    # m=2 oscillates: the curve comes back down after its early peak
    stats = run_ensemble(
        SweepConfig(n=51, m_values=(2,), s_values=tuple(range(3, 52, 2)), unitary_kind=UnitaryKind.UNIFORM_SPREADING)
    )
    assert np.any(np.diff(stats.mean_K[0]) < 0)


# --- loss sweeps -------------------------------------------------------------


def test_loss_requires_matched_grids():
    with pytest.raises(DimensionError, match="s_values == m_values"):
        loss_sweep(SweepConfig(n=9, m_values=(3, 5), s_values=(3, 7), realizations=2))


def test_loss_vanishes_without_truncation():
    points = loss_sweep(SweepConfig(n=9, m_values=(9,), s_values=(9,), realizations=3))
    assert points[0].mean_loss == pytest.approx(0.0, abs=1e-10)
    assert points[0].mean_captured_weight == pytest.approx(1.0, abs=1e-12)


def test_loss_points_are_consistent():
    config = SweepConfig(n=11, m_values=(3, 5, 7), s_values=(3, 5, 7), realizations=8, master_seed=1)
    points = loss_sweep(config)
    assert [p.m for p in points] == [3, 5, 7]
    for p in points:
        assert p.mean_loss == pytest.approx(p.m - p.mean_K, abs=1e-12)
        assert 0.0 < p.mean_K <= p.m
        assert p.std_loss >= 0.0


def test_loss_matches_diagonal_of_full_sweep():
    config = SweepConfig(n=11, m_values=(3, 5), s_values=(3, 5), realizations=6, master_seed=9)
    points = loss_sweep(config)
    stats = run_ensemble(config)
    for i, p in enumerate(points):
        assert p.mean_K == stats.mean_K[i, i]
        assert p.std_loss == stats.std_K[i, i]
