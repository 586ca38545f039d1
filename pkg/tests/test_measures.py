import numpy as np
import pytest

import oracles
from predval.errors import MeasureError, NotDependentError, PredvalError
from predval.games import PlayerPermutation, make_table_game, make_unanimity_game, make_weighted_game
from predval.indices import decisiveness, shapley
from predval.measures import (
    CoalitionMeasure,
    ProbabilisticGame,
    condition,
    detect_product_measure,
    membership_probabilities,
    permute_measure,
    product_measure,
    reduce,
    shapley_inducing_measure,
    uniform_measure,
)


def test_measure_validation():
    with pytest.raises(MeasureError):
        CoalitionMeasure(1, [0.5, 0.6])
    with pytest.raises(MeasureError):
        CoalitionMeasure(1, [-0.5, 1.5])
    with pytest.raises(MeasureError):
        CoalitionMeasure(2, [1.0])
    assert CoalitionMeasure(1, [0.0, 0.0]).is_degenerate


def test_sparse_roundtrip():
    P = CoalitionMeasure.from_sparse(3, {0b011: 2 / 3, 0b001: 1 / 3})
    assert P.support() == [0b001, 0b011]
    assert P.to_sparse() == {0b001: 1 / 3, 0b011: 2 / 3}
    with pytest.raises(MeasureError):
        CoalitionMeasure.from_sparse(2, {4: 1.0})


def test_product_measure_matches_naive():
    p = [0.2, 0.7, 0.5]
    np.testing.assert_allclose(product_measure(p).mass, oracles.product_mass(p), atol=1e-15)
    np.testing.assert_allclose(membership_probabilities(product_measure(p)), p, atol=1e-15)
    with pytest.raises(MeasureError):
        product_measure([1.2])


def test_condition():
    P = CoalitionMeasure(2, [0.1, 0.2, 0.3, 0.4])
    inside = condition(P, 0, True)
    assert inside.mass.tolist() == pytest.approx([0, 1 / 3, 0, 2 / 3])
    outside = condition(P, 0, False)
    assert outside.mass.tolist() == pytest.approx([0.25, 0, 0.75, 0])
    null = condition(CoalitionMeasure(2, [1, 0, 0, 0]), 1, True)
    assert null.is_degenerate


def test_detect_product_measure():
    p = [0.3, 0.6]
    np.testing.assert_allclose(detect_product_measure(product_measure(p)), p)
    assert detect_product_measure(CoalitionMeasure(2, [0.5, 0, 0, 0.5])) is None
    # marginals on the boundary are not accepted
    assert detect_product_measure(product_measure([1.0, 0.5])) is None


def test_reduce_merges_and_averages():
    n = 3
    mass = np.zeros(8)
    mass[0] = mass[7] = 0.5
    G = ProbabilisticGame(make_weighted_game([1, 1, 1], 2), CoalitionMeasure(n, mass))
    R, index_map = reduce(G, 2)
    assert index_map == {0: 0, 1: 1}
    assert R.measure.mass.tolist() == [0.5, 0, 0, 0.5]
    # S=empty merges v(empty)=0 and v({2})=0 with zero weight on the latter
    assert R.game.worth.tolist() == [0, 0, 0, 1]


def test_reduce_convex_combination():
    worth = [0, 0, 1, 3]
    P = CoalitionMeasure(2, [0.1, 0.2, 0.3, 0.4])
    R, _ = reduce(ProbabilisticGame(make_table_game(2, worth), P), 0)
    assert R.measure.mass.tolist() == pytest.approx([0.3, 0.7])
    assert R.game.worth.tolist() == pytest.approx([0, (0.3 * 1 + 0.4 * 3) / 0.7])


def test_reduce_requires_dependent_player():
    G = ProbabilisticGame(make_unanimity_game(2, [0]), uniform_measure(2))
    with pytest.raises(NotDependentError):
        reduce(G, 0)
    with pytest.raises(PredvalError):
        reduce(ProbabilisticGame(make_table_game(1, [0, 0]), uniform_measure(1)), 0)


def test_reduce_drops_name():
    g = make_table_game(3, [0, 0, 0, 1, 0, 1, 1, 1], names=["a", "b", "c"])
    R, _ = reduce(ProbabilisticGame(g, uniform_measure(3)), 1)
    assert R.game.names == ("a", "c")


@pytest.mark.parametrize("side", ["plus", "minus"])
@pytest.mark.parametrize("n", [1, 2, 5])
def test_shapley_inducing_measure(side, n):
    P = shapley_inducing_measure(n, side)
    assert P.total == pytest.approx(1.0, abs=1e-12)
    rng = np.random.default_rng(n)
    worth = rng.uniform(-1, 1, 1 << n)
    worth[0] = 0
    g = make_table_game(n, worth)
    np.testing.assert_allclose(decisiveness(ProbabilisticGame(g, P), side), shapley(g), atol=1e-12)


def test_permute_measure():
    P = CoalitionMeasure(2, [0.1, 0.2, 0.3, 0.4])
    Q = permute_measure(P, PlayerPermutation([1, 0]))
    assert Q.mass.tolist() == [0.1, 0.3, 0.2, 0.4]
