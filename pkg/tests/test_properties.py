"""Randomised properties via hypothesis."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from predval.games import PlayerPermutation, harsanyi_dividends, make_table_game, permute_game
from predval.indices import banzhaf, decisiveness, prediction_value, shapley
from predval.measures import CoalitionMeasure, ProbabilisticGame, permute_measure, product_measure, uniform_measure

small = dict(max_examples=60, deadline=None)


@st.composite
def games(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(st.floats(-10, 10, allow_nan=False), min_size=(1 << n) - 1, max_size=(1 << n) - 1))
    return make_table_game(n, [0.0] + vals)


@st.composite
def prob_games(draw, min_n=1, max_n=6):
    g = draw(games(min_n, max_n))
    mass = draw(
        st.lists(st.floats(0, 1, allow_nan=False), min_size=1 << g.n, max_size=1 << g.n).filter(lambda m: sum(m) > 1e-3)
    )
    m = np.asarray(mass)
    return ProbabilisticGame(g, CoalitionMeasure(g.n, m / m.sum()))


@settings(**small)
@given(games())
def test_dividends_reconstruct(g):
    np.testing.assert_allclose(harsanyi_dividends(g).reconstruct(), g.worth, atol=1e-9)


@settings(**small)
@given(games())
def test_shapley_efficient(g):
    assert abs(shapley(g).sum() - g.worth[-1]) < 1e-9


@settings(**small)
@given(prob_games(), st.randoms(use_true_random=False))
def test_pv_anonymous(G, rnd):
    mapping = list(range(G.n))
    rnd.shuffle(mapping)
    perm = PlayerPermutation(mapping)
    H = ProbabilisticGame(permute_game(G.game, perm), permute_measure(G.measure, perm))
    np.testing.assert_allclose(prediction_value(H)[mapping], prediction_value(G), atol=1e-9)


@settings(**small)
@given(prob_games(), st.floats(-3, 3, allow_nan=False))
def test_pv_homogeneous(G, a):
    scaled = ProbabilisticGame(G.game * a, G.measure)
    np.testing.assert_allclose(prediction_value(scaled), a * prediction_value(G), atol=1e-8)


@settings(**small)
@given(games(), st.lists(st.floats(0.05, 0.95), min_size=6, max_size=6))
def test_product_measure_pv_equals_decisiveness(g, p):
    G = ProbabilisticGame(g, product_measure(p[: g.n]))
    xi = prediction_value(G)
    np.testing.assert_allclose(xi, decisiveness(G, "plus"), atol=1e-9)
    np.testing.assert_allclose(xi, decisiveness(G, "minus"), atol=1e-9)


@settings(**small)
@given(games())
def test_uniform_pv_is_banzhaf(g):
    np.testing.assert_allclose(prediction_value(ProbabilisticGame(g, uniform_measure(g.n))), banzhaf(g), atol=1e-9)
