from __future__ import annotations

import dataclasses
import math
import random
from collections import Counter

import numpy as np
import pytest
import scipy.sparse

from data_model import Box, Diverged, EmptyCounts, InvalidConfig, LogBase, NonFiniteInput
from dynsys import MapSystem, builtin, step
from estimator import (
    OrbitConfig,
    TransitionCounts,
    count_transitions,
    ecd,
    ecd_pipeline,
    generate_orbit,
    trajectory,
)
from partition import GridPartition, standard_partition

LN2 = math.log(2.0)


def _line(cells: int, lo: float = 0.0, hi: float = 1.0) -> GridPartition:
    return GridPartition(Box.cube(lo, hi, 1), (cells,))


def _counts_from_pairs(pairs: dict[tuple[int, int], int], n_cells: int) -> TransitionCounts:
    """TransitionCounts z ręcznie zadanej tablicy zliczeń."""
    rows, cols, data = zip(*((i, j, c) for (i, j), c in pairs.items()))
    matrix = scipy.sparse.csr_matrix((data, (rows, cols)), shape=(n_cells, n_cells), dtype=np.int64)
    return TransitionCounts(matrix=matrix, total=sum(data), overflow_hits=0, n_cells=n_cells)


# ---------------------------------------------------------------------------
# OrbitConfig / generate_orbit
# ---------------------------------------------------------------------------

def test_orbit_config_validation():
    with pytest.raises(InvalidConfig):
        OrbitConfig(x0=(0.1,), n=0)
    with pytest.raises(InvalidConfig):
        OrbitConfig(x0=(0.1,), escape_radius=0.0)
    with pytest.raises(InvalidConfig):
        OrbitConfig(x0=(0.1,), transient=-1)
    with pytest.raises(InvalidConfig):
        OrbitConfig(x0=(float("nan"),))
    with pytest.raises(InvalidConfig):
        OrbitConfig(x0=(0.1,), roundoff=0.1)


def test_orbit_has_n_plus_one_states(orbit_cfg):
    orbit = generate_orbit(builtin("baker"), (1.0,), orbit_cfg((0.3, 0.3), n=500, transient=20))
    assert orbit.shape == (501, 2)


def test_bernoulli_contracting_orbit_reaches_zero(orbit_cfg):
    orbit = generate_orbit(builtin("bernoulli"), (0.4,), orbit_cfg((0.3,), n=1000, transient=1000))
    assert not isinstance(orbit, Diverged)
    assert np.all(np.abs(orbit) < 1e-12)


def test_zero_stays_zero_under_roundoff(orbit_cfg):
    orbit = generate_orbit(builtin("bernoulli"), (0.0,), orbit_cfg((0.3,), n=200, transient=0))
    assert np.all(orbit == 0.0)


def test_pure_orbit_equals_composed_steps():
    system = builtin("tinkerbell_a")
    cfg = OrbitConfig(x0=(0.1, 0.1), roundoff=0.0)
    states = trajectory(system, (0.9,), cfg, 0, 50)
    x = (0.1, 0.1)
    expected = [x]
    for _ in range(50):
        x = step(system, x, (0.9,))
        expected.append(x)
    assert [tuple(row) for row in states.tolist()] == expected


def test_roundoff_stream_is_deterministic_and_seeded():
    system = builtin("bernoulli")
    a = trajectory(system, (1.0,), OrbitConfig(x0=(0.3,), seed=3), 0, 300)
    b = trajectory(system, (1.0,), OrbitConfig(x0=(0.3,), seed=3), 0, 300)
    c = trajectory(system, (1.0,), OrbitConfig(x0=(0.3,), seed=4), 0, 300)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_window_does_not_depend_on_orbit_length():
    system = builtin("baker")
    cfg = OrbitConfig(x0=(0.3, 0.3))
    short = trajectory(system, (1.0,), cfg, 100, 200)
    long = trajectory(system, (1.0,), cfg, 0, 400)
    assert np.array_equal(short, long[100:201])


@pytest.mark.parametrize(
    ("name", "params"),
    [("bernoulli", (1.0,)), ("baker", (0.93,)), ("tinkerbell_a", (0.9,)), ("tinkerbell_b", (2.9,)), ("logistic", (3.9,))],
)
@pytest.mark.parametrize("roundoff", [0.0, 2.0 ** -50])
def test_compiled_orbit_matches_python_iteration(name, params, roundoff):
    system = builtin(name)
    plain = dataclasses.replace(system, kernel=None)
    cfg = OrbitConfig(x0=system.x0, roundoff=roundoff, seed=7)
    compiled = trajectory(system, params, cfg, 0, 3000)
    python = trajectory(plain, params, cfg, 0, 3000)
    assert np.array_equal(compiled, python)


def test_compiled_orbit_reports_divergence_like_python():
    system = builtin("tinkerbell_a")
    plain = dataclasses.replace(system, kernel=None)
    cfg = OrbitConfig(x0=(0.1, 0.1), transient=0, n=500)
    compiled = generate_orbit(system, (5.0,), cfg)
    assert isinstance(compiled, Diverged)
    assert compiled == generate_orbit(plain, (5.0,), cfg)


def test_roundoff_keeps_full_slope_orbit_alive():
    # bez regularyzacji orbita nachylenia 2 utyka w punkcie stałym po ~55 krokach
    system = builtin("bernoulli")
    pure = trajectory(system, (1.0,), OrbitConfig(x0=(0.3,), roundoff=0.0), 200, 300)
    noisy = trajectory(system, (1.0,), OrbitConfig(x0=(0.3,)), 200, 300)
    assert np.unique(pure).size == 1
    assert np.unique(noisy).size > 50


def test_tinkerbell_orbit_is_bounded(orbit_cfg):
    orbit = generate_orbit(builtin("tinkerbell_a"), (0.9,), orbit_cfg((0.1, 0.1), n=100_000, transient=1000))
    assert not isinstance(orbit, Diverged)
    assert np.all(np.isfinite(orbit))


def test_nan_step_is_reported_as_divergence():
    system = MapSystem(
        name="nan_at_4",
        dimension=1,
        domain=Box.cube(0.0, 10.0, 1),
        param_names=(),
        step_fn=lambda x, p: (x[0] + 1.0,) if x[0] < 3.0 else (float("nan"),),
    )
    result = generate_orbit(system, (), OrbitConfig(x0=(0.0,), transient=0, n=10, roundoff=0.0))
    assert result == Diverged(4, "non-finite")


def test_escape_is_reported_as_divergence():
    system = MapSystem(
        name="times_ten",
        dimension=1,
        domain=Box.cube(-1.0, 1.0, 1),
        param_names=(),
        step_fn=lambda x, p: (10.0 * x[0],),
    )
    result = generate_orbit(system, (), OrbitConfig(x0=(1.0,), transient=0, n=20, roundoff=0.0))
    assert result == Diverged(7, "escape")


def test_tinkerbell_far_outside_parameter_range_diverges(orbit_cfg):
    result = generate_orbit(builtin("tinkerbell_a"), (5.0,), orbit_cfg((0.1, 0.1)))
    assert isinstance(result, Diverged)


# ---------------------------------------------------------------------------
# count_transitions
# ---------------------------------------------------------------------------

def test_constant_orbit_counts():
    p = _line(2000)
    counts = count_transitions(np.zeros((101, 1)), p)
    assert counts.as_dict() == {(0, 0): 100}
    assert counts.total == 100


def test_period_two_counts():
    orbit = np.array([[0.1], [0.9]] * 50 + [[0.1]])
    counts = count_transitions(orbit, _line(2))
    assert counts.as_dict() == {(0, 1): 50, (1, 0): 50}


def test_hand_counted_orbit():
    counts = count_transitions(np.array([[0.1], [0.6], [0.1]]), _line(2))
    assert counts.as_dict() == {(0, 1): 1, (1, 0): 1}


def test_overflow_hits_are_counted():
    counts = count_transitions(np.array([[0.1], [1.5], [0.2], [0.3]]), _line(2))
    assert counts.as_dict() == {(0, 2): 1, (2, 0): 1, (0, 0): 1}
    assert counts.overflow_hits == 2


def test_marginals_sum_to_total():
    rng = np.random.default_rng(9)
    counts = count_transitions(rng.uniform(0, 1, size=(1001, 1)), _line(17))
    assert counts.row_totals().sum() == counts.column_totals().sum() == counts.total == 1000


def test_non_finite_orbit_is_rejected():
    with pytest.raises(NonFiniteInput):
        count_transitions(np.array([[0.1], [float("nan")]]), _line(2))


# ---------------------------------------------------------------------------
# ecd
# ---------------------------------------------------------------------------

def test_single_transition_gives_zero():
    result = ecd(_counts_from_pairs({(3, 3): 1000}, 10))
    assert result.ecd == 0.0
    assert result.shannon_out == 0.0
    assert result.occupied_cells == 1


def test_independent_uniform_joint_gives_log_two():
    pairs = {(0, 0): 25, (0, 1): 25, (1, 0): 25, (1, 1): 25}
    result = ecd(_counts_from_pairs(pairs, 3))
    assert result.ecd == pytest.approx(LN2, abs=1e-12)
    assert result.mutual_info == pytest.approx(0.0, abs=1e-12)
    assert ecd(_counts_from_pairs(pairs, 3), LogBase.TWO).ecd == pytest.approx(1.0, abs=1e-12)


def test_empty_counts():
    empty = TransitionCounts(scipy.sparse.csr_matrix((3, 3), dtype=np.int64), 0, 0, 3)
    with pytest.raises(EmptyCounts):
        ecd(empty)


def test_deterministic_transitions_give_exact_zero():
    rng = random.Random(4)
    for _ in range(50):
        target = {i: rng.randrange(8) for i in range(8)}
        pairs = Counter()
        for i in range(8):
            pairs[(i, target[i])] += rng.randint(1, 40)
        assert ecd(_counts_from_pairs(dict(pairs), 9)).ecd == 0.0


def _brute_force_ecd(cells: list[int]) -> float:
    """Σ r_ij log(p_i / r_ij) liczone wprost z par, bez kodu estymatora."""
    n = len(cells) - 1
    joint: dict[tuple[int, int], int] = {}
    inp: dict[int, int] = {}
    for k in range(n):
        pair = (cells[k], cells[k + 1])
        joint[pair] = joint.get(pair, 0) + 1
        inp[cells[k]] = inp.get(cells[k], 0) + 1
    total = 0.0
    for (i, _j), c in joint.items():
        r = c / n
        total += r * math.log((inp[i] / n) / r)
    return total


def test_ecd_matches_brute_force_formula():
    rng = random.Random(2024)
    for _ in range(1000):
        n_cells = rng.randint(1, 7)
        p = _line(n_cells)
        length = rng.randint(2, 50)
        xs = [rng.uniform(-0.2, 1.2) for _ in range(length)]
        orbit = np.array(xs).reshape(-1, 1)
        cells = [p.cell_index((x,)) for x in xs]

        result = ecd(count_transitions(orbit, p))
        assert result.ecd == pytest.approx(_brute_force_ecd(cells), abs=1e-12)
        assert result.identity_gap <= 1e-12
        assert 0.0 <= result.ecd <= result.shannon_out + 1e-15
        assert result.shannon_out <= math.log(result.occupied_cells) + 1e-12


# ---------------------------------------------------------------------------
# ecd_pipeline
# ---------------------------------------------------------------------------

def test_bernoulli_zero_parameter_gives_zero(orbit_cfg):
    result = ecd_pipeline(builtin("bernoulli"), (0.0,), standard_partition("bernoulli"), orbit_cfg((0.3,)))
    assert result.ecd == 0.0


@pytest.mark.parametrize("a", [0.0, 0.1, 0.25, 0.4])
def test_bernoulli_contracting_regime_gives_zero(orbit_cfg, a):
    cfg = orbit_cfg((0.3,), n=5000, transient=1000)
    result = ecd_pipeline(builtin("bernoulli"), (a,), standard_partition("bernoulli"), cfg)
    assert result.ecd == 0.0


def test_bernoulli_full_slope_gives_log_two():
    cfg = OrbitConfig(x0=(0.3,), transient=1000, n=100_000)
    result = ecd_pipeline(builtin("bernoulli"), (1.0,), standard_partition("bernoulli"), cfg)
    assert result.ecd == pytest.approx(LN2, abs=0.02)
    assert result.identity_gap <= 1e-12
    assert result.overflow_fraction == 0.0


def test_baker_full_slope_near_log_two():
    cfg = OrbitConfig(x0=(0.3, 0.3), transient=1000, n=100_000)
    result = ecd_pipeline(builtin("baker"), (1.0,), standard_partition("baker"), cfg)
    # ~10 punktów na komórkę: estymator jest obciążony w dół o ~0.05
    assert 0.6 < result.ecd <= LN2 + 1e-12


@pytest.mark.slow
def test_baker_full_slope_converges_to_log_two():
    cfg = OrbitConfig(x0=(0.3, 0.3), transient=1000, n=1_000_000)
    result = ecd_pipeline(builtin("baker"), (1.0,), standard_partition("baker"), cfg)
    assert result.ecd == pytest.approx(LN2, rel=0.03)


def test_tinkerbell_variants_give_identical_results(orbit_cfg):
    cfg = orbit_cfg((0.1, 0.1), n=5000)
    part = standard_partition("tinkerbell_a")
    fa = ecd_pipeline(builtin("tinkerbell_a"), (-0.3,), part, cfg)
    fb = ecd_pipeline(builtin("tinkerbell_b"), (2.0,), part, cfg)
    assert fa == fb


def test_pipeline_passes_divergence_through(orbit_cfg):
    result = ecd_pipeline(builtin("tinkerbell_a"), (5.0,), standard_partition("tinkerbell_a"), orbit_cfg((0.1, 0.1)))
    assert isinstance(result, Diverged)


@pytest.mark.parametrize(
    ("name", "params"),
    [("bernoulli", (0.7,)), ("baker", (0.8,)), ("tinkerbell_a", (0.9,)), ("tinkerbell_b", (2.9,)), ("logistic", (3.9,))],
)
def test_ecd_bounds_on_builtin_maps(orbit_cfg, name, params):
    system = builtin(name)
    part = standard_partition(name)
    result = ecd_pipeline(system, params, part, orbit_cfg(system.x0, n=20_000))
    assert not isinstance(result, Diverged)
    assert 0.0 <= result.ecd <= result.shannon_out <= math.log(result.occupied_cells) + 1e-12
    assert result.ecd <= math.log(part.regular_cells + 1)
    assert result.identity_gap <= 1e-12
