import numpy as np
import pytest

import oracles
from predval.errors import PredvalError, SizeGuardError
from predval.games import (
    PlayerPermutation,
    cardinality,
    check_size,
    coalition,
    harsanyi_dividends,
    majority_quota,
    make_table_game,
    make_unanimity_game,
    make_weighted_game,
    max_players,
    members,
    permute_game,
)


def test_coalition_roundtrip():
    assert coalition([0, 2]) == 0b101
    assert members(0b101, 3) == (0, 2)
    assert cardinality(0b1011) == 3
    assert coalition([]) == 0


def test_size_guard_env(monkeypatch):
    monkeypatch.setenv("COALITION_MAX_N", "4")
    assert max_players() == 4
    with pytest.raises(SizeGuardError):
        check_size(5)
    monkeypatch.setenv("COALITION_MAX_N", "40")  # may not raise the cap
    assert max_players() == 26
    monkeypatch.setenv("COALITION_MAX_N", "lots")
    with pytest.raises(PredvalError):
        max_players()


def test_size_guard_default():
    with pytest.raises(SizeGuardError):
        check_size(27)
    with pytest.raises(PredvalError):
        check_size(0)


def test_weighted_game_matches_naive():
    weights = [41, 6, 3, 7, 33, 2, 9, 2, 25, 1, 21]
    g = make_weighted_game(weights, 76)
    assert g.worth.tolist() == oracles.weighted_worth(weights, 76)
    for bits in (0, 1, 0b10001, (1 << 11) - 1):
        assert g.value(bits) == g.worth[bits]


def test_majority_quota():
    assert majority_quota([1, 1, 1]) == 2
    assert majority_quota([41, 6, 3, 7, 33, 2, 9, 2, 25, 1, 21]) == 76


def test_table_validation():
    with pytest.raises(PredvalError):
        make_table_game(2, [0, 1, 1])
    with pytest.raises(PredvalError):
        make_table_game(1, [1, 1])
    with pytest.raises(PredvalError):
        make_table_game(1, [0, np.nan])


def test_weighted_validation():
    with pytest.raises(PredvalError):
        make_weighted_game([], 1)
    with pytest.raises(PredvalError):
        make_weighted_game([1, -1], 1)
    with pytest.raises(PredvalError):
        make_weighted_game([1, 1], 0)


def test_unanimity_game():
    u = make_unanimity_game(3, [0, 1])
    assert u.worth.tolist() == [0, 0, 0, 1, 0, 0, 0, 1]
    assert u == make_unanimity_game(3, 0b011)
    with pytest.raises(PredvalError):
        make_unanimity_game(3, [])
    with pytest.raises(PredvalError):
        make_unanimity_game(2, [2])


def test_worth_is_read_only():
    g = make_weighted_game([1, 1, 1], 2)
    with pytest.raises(ValueError):
        g.worth[3] = 5


def test_game_arithmetic():
    a = make_unanimity_game(2, [0])
    b = make_unanimity_game(2, [1])
    s = 2 * a - b
    assert s.worth.tolist() == [0, 2, -1, 1]
    assert (-s).worth.tolist() == [0, -2, 1, -1]


def test_unanimity_basis_dividend():
    d = harsanyi_dividends(make_unanimity_game(4, [1, 3]), exact=True)
    assert d.nonzero() == [(0b1010, 1)]


def test_majority_dividends():
    d = harsanyi_dividends(make_weighted_game([1, 1, 1], 2), exact=True)
    assert d.as_dict() == {0b011: 1, 0b101: 1, 0b110: 1, 0b111: -2}


@pytest.mark.parametrize("n", [1, 3, 6])
def test_dividends_reconstruct(n):
    rng = np.random.default_rng(n)
    worth = rng.normal(size=1 << n)
    worth[0] = 0
    g = make_table_game(n, worth)
    np.testing.assert_allclose(harsanyi_dividends(g).reconstruct(), worth, atol=1e-12)


def test_exact_requires_integers():
    g = make_table_game(1, [0, 0.5])
    assert not g.is_integer_valued()
    with pytest.raises(PredvalError):
        harsanyi_dividends(g, exact=True)


def test_permutation():
    perm = PlayerPermutation([2, 0, 1])
    assert perm.apply(0b001) == 0b100
    assert perm.inverse().apply(perm.apply(0b011)) == 0b011
    with pytest.raises(PredvalError):
        PlayerPermutation([0, 0])
    assert PlayerPermutation.swap(3, 0, 2).mapping == (2, 1, 0)


def test_permute_game_kinds():
    w = make_weighted_game([3, 1, 1], 3, names=["a", "b", "c"])
    pw = permute_game(w, PlayerPermutation([1, 2, 0]))
    assert pw.kind == "weighted"
    assert pw.weights == (1.0, 3.0, 1.0)
    assert pw.names == ("c", "a", "b")
    u = permute_game(make_unanimity_game(3, [0]), PlayerPermutation([1, 2, 0]))
    assert u.support == 0b010
    t = make_table_game(2, [0, 1, 2, 3])
    assert permute_game(t, PlayerPermutation([1, 0])).worth.tolist() == [0, 2, 1, 3]
