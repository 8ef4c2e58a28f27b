from __future__ import annotations

import numpy as np
import pytest

from data_model import Box, InvalidConfig, NoJacobian, NonFiniteResult, UnknownMap
from dynsys import (
    BUILTIN_NAMES,
    MapSystem,
    NumericJacobian,
    builtin,
    jacobian,
    resolve_params,
    step,
)


# ---------------------------------------------------------------------------
# step
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    ("name", "params", "x", "expected"),
    [
        ("bernoulli", (1.0,), (0.25,), (0.5,)),
        ("bernoulli", (0.5,), (0.75,), (0.25,)),
        ("baker", (1.0,), (0.25, 0.5), (0.5, 0.25)),
        ("tinkerbell_a", (0.9,), (0.1, 0.1), (0.03, 0.27)),
        ("logistic", (4.0,), (0.5,), (1.0,)),
    ],
)
def test_step_examples(name, params, x, expected):
    assert step(builtin(name), x, params) == pytest.approx(expected, abs=1e-12)


def test_branch_boundary_belongs_to_first_branch():
    # 2a·0.5 = a (gałąź 1), a(2·0.5 − 1) = 0 (gałąź 2)
    assert step(builtin("bernoulli"), (0.5,), (0.8,)) == (0.8,)
    assert step(builtin("baker"), (0.5, 0.2), (1.0,)) == (1.0, 0.1)


def test_step_is_deterministic():
    system = builtin("tinkerbell_a")
    assert step(system, (0.1, 0.1), (0.9,)) == step(system, (0.1, 0.1), (0.9,))


def test_tinkerbell_variants_agree_bitwise():
    fa, fb = builtin("tinkerbell_a"), builtin("tinkerbell_b")
    rng = np.random.default_rng(7)
    for x in rng.uniform((-1.2, -0.7), (0.4, 0.3), size=(200, 2)):
        point = (float(x[0]), float(x[1]))
        assert step(fa, point, (-0.3,)) == step(fb, point, (2.0,))
        assert np.array_equal(jacobian(fa, point, (-0.3,)), jacobian(fb, point, (2.0,)))


def test_bernoulli_stays_in_unit_interval():
    system = builtin("bernoulli")
    rng = np.random.default_rng(3)
    for a in (0.0, 0.3, 0.5, 0.77, 1.0):
        for x in rng.uniform(0.0, 1.0, size=100):
            (y,) = step(system, (float(x),), (a,))
            assert 0.0 <= y <= 1.0


def test_step_rejects_wrong_arity():
    with pytest.raises(InvalidConfig):
        step(builtin("bernoulli"), (0.1,), (1.0, 2.0))
    with pytest.raises(InvalidConfig):
        step(builtin("baker"), (0.1,), (1.0,))


def test_step_reports_non_finite_output():
    system = MapSystem(
        name="blowup",
        dimension=1,
        domain=Box.cube(0.0, 1.0, 1),
        param_names=(),
        step_fn=lambda x, p: (float("nan"),),
    )
    with pytest.raises(NonFiniteResult):
        step(system, (0.5,), ())


# ---------------------------------------------------------------------------
# jacobian
# ---------------------------------------------------------------------------

def test_jacobian_examples():
    assert jacobian(builtin("bernoulli"), (0.2,), (0.7,))[0, 0] == pytest.approx(1.4)
    assert jacobian(builtin("bernoulli"), (0.9,), (0.7,))[0, 0] == pytest.approx(1.4)
    np.testing.assert_allclose(jacobian(builtin("baker"), (0.7, 0.1), (1.0,)), np.diag([2.0, 0.5]))
    np.testing.assert_allclose(
        jacobian(builtin("tinkerbell_a"), (0.0, 0.0), (0.9,)),
        [[0.9, -0.6], [2.0, 0.5]],
    )


@pytest.mark.parametrize(
    ("name", "params"),
    [("bernoulli", (0.8,)), ("baker", (0.9,)), ("tinkerbell_a", (0.9,)), ("tinkerbell_b", (2.5,)), ("logistic", (3.7,))],
)
def test_analytic_jacobian_matches_central_differences(name, params):
    system = builtin(name)
    numeric = NumericJacobian(system.step_fn)
    rng = np.random.default_rng(11)
    lows, highs = np.array(system.domain.lows), np.array(system.domain.highs)
    checked = 0
    while checked < 100:
        x = tuple(float(v) for v in rng.uniform(lows, highs))
        if abs(x[0] - 0.5) < 1e-3:
            continue  # z dala od granicy gałęzi
        exact = jacobian(system, x, params)
        approx = numeric(x, params)
        scale = np.maximum(np.abs(exact), 1.0)
        assert np.all(np.abs(approx - exact) / scale <= 1e-5)
        checked += 1


def test_jacobian_missing():
    system = MapSystem(
        name="nojac",
        dimension=1,
        domain=Box.cube(0.0, 1.0, 1),
        param_names=(),
        step_fn=lambda x, p: x,
    )
    assert not system.has_jacobian
    with pytest.raises(NoJacobian):
        jacobian(system, (0.5,), ())


# ---------------------------------------------------------------------------
# builtin / resolve_params
# ---------------------------------------------------------------------------

def test_builtin_domains():
    tb = builtin("tinkerbell_a")
    assert tb.domain == Box(lows=(-1.2, -0.7), highs=(0.4, 0.3))
    bern = builtin("bernoulli")
    assert bern.dimension == 1
    assert bern.domain == Box(lows=(0.0,), highs=(1.0,))


def test_builtin_registry_is_complete():
    assert set(BUILTIN_NAMES) == {"bernoulli", "baker", "tinkerbell_a", "tinkerbell_b", "logistic"}
    for name in BUILTIN_NAMES:
        system = builtin(name)
        assert system.name == name
        assert system.has_jacobian
        assert len(system.x0) == system.dimension
        assert len(system.param_defaults) == len(system.param_names)


def test_builtin_unknown():
    with pytest.raises(UnknownMap):
        builtin("unknown")


def test_resolve_params():
    system = builtin("tinkerbell_b")
    assert resolve_params(system) == (2.9,)
    assert resolve_params(system, {"b": 2.0}) == (2.0,)
    with pytest.raises(InvalidConfig):
        resolve_params(system, {"a": 1.0})


def test_box_validation():
    with pytest.raises(InvalidConfig):
        Box(lows=(1.0,), highs=(0.0,))
    with pytest.raises(InvalidConfig):
        Box(lows=(0.0, 0.0), highs=(1.0,))
