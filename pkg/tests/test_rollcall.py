import io

import numpy as np
import pytest

import oracles
from predval.errors import ParseError, PredvalError, SizeGuardError
from predval.measures import membership_probabilities
from predval.rollcall import (
    RollCallDataset,
    empirical_measure,
    parse_rollcall_csv,
    vote_correlation_matrix,
    yes_rates,
)


def parse(text):
    return parse_rollcall_csv(io.StringIO(text))


def test_direct_encoding():
    ds = parse("a,b\n1,1\n1,0\n")
    assert ds.players == ("a", "b")
    assert ds.records.tolist() == [0b11, 0b01]
    assert ds.count == 2


def test_vote_tokens_and_blank_rows():
    ds = parse("a,b,c\nY, n ,1\n\ny,N,0\n")
    assert ds.records.tolist() == [0b101, 0b001]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("a,b\n1,x\n", "line 2, column 2 (b)"),
        ("a,b\n1,1\n1\n", "line 3"),
        ("", "empty input"),
        (",\n1,1\n", "empty header"),
        ("a,a\n1,1\n", "duplicate"),
        ("a,\n1,1\n", "blank player name"),
        ("a,b\n", "no division rows"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        parse(text)


def test_size_guard_on_header(monkeypatch):
    monkeypatch.setenv("COALITION_MAX_N", "2")
    with pytest.raises(SizeGuardError, match="line 1"):
        parse("a,b,c\n1,1,1\n")


def test_dataset_validation():
    with pytest.raises(PredvalError):
        RollCallDataset(("a",), np.array([2]))


def test_empirical_measure_frequencies():
    ds = parse("a,b\n1,1\n1,1\n1,0\n")
    P = empirical_measure(ds)
    assert P.to_sparse() == pytest.approx({0b01: 1 / 3, 0b11: 2 / 3})
    assert P.total == pytest.approx(1.0)


def test_empirical_measure_smoothing():
    ds = RollCallDataset(("a",), np.array([1]))
    P = empirical_measure(ds, smoothing=1.0)
    assert P.mass.tolist() == pytest.approx([1 / 3, 2 / 3])
    with pytest.raises(PredvalError):
        empirical_measure(ds, smoothing=-1)


def test_correlation_identical_and_opposite():
    ds = parse("a,b,c,d\n1,1,0,1\n0,0,1,1\n1,1,0,1\n0,0,1,0\n")
    corr = vote_correlation_matrix(ds)
    assert corr[0, 1] == 1.0
    assert corr[0, 2] == -1.0
    assert corr.defined.all()


def test_correlation_vs_oracle_and_constant_series():
    rng = np.random.default_rng(5)
    X = rng.integers(0, 2, (50, 4))
    X[:, 3] = 1
    records = (X * (1 << np.arange(4))).sum(axis=1)
    ds = RollCallDataset(("a", "b", "c", "d"), records)
    corr = vote_correlation_matrix(ds)
    for i in range(3):
        for j in range(3):
            assert corr[i, j] == pytest.approx(oracles.pearson(X[:, i].tolist(), X[:, j].tolist()), abs=1e-12)
    assert not corr.defined[3].any()
    assert np.isnan(corr[3, 0])
    with pytest.raises(PredvalError):
        vote_correlation_matrix(RollCallDataset(("a",), [1]))


def test_yes_rates_agree_with_membership():
    ds = parse("a,b\n1,0\n1,1\n0,0\n1,0\n")
    np.testing.assert_allclose(yes_rates(ds), [0.75, 0.25])
    np.testing.assert_allclose(membership_probabilities(empirical_measure(ds)), [0.75, 0.25])
