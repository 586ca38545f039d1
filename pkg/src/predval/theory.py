"""Executable forms of the characterisation and equivalence results.

Axiom checks are falsification searches: a fixed set of fixtures plus
seeded random probabilistic games. ``holds=True`` means no violation was
found, not that the axiom was proved.

Random trials draw from per-trial generators seeded with
``(seed, axiom, trial)`` so results do not depend on evaluation order.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

import numpy as np

from . import kernels
from .errors import MeasureError, NormalizationError, PredvalError
from .games import (
    PlayerPermutation,
    harsanyi_dividends,
    make_table_game,
    make_unanimity_game,
    make_weighted_game,
    permute_game,
)
from .indices import (
    ProbabilisticValueFamily,
    SemivalueWeights,
    banzhaf,
    decisiveness,
    prediction_value,
    probabilistic_value,
    shapley,
)
from .measures import (
    CoalitionMeasure,
    ProbabilisticGame,
    condition,
    detect_product_measure,
    permute_measure,
    product_measure,
    reduce,
)

log = logging.getLogger(__name__)

AXIOMS = ("anonymity", "linearity", "consistency", "full_control", "iddp")
DIVIDEND_CUTOFF = 1e-9

__all__ = [
    "AXIOMS",
    "ExtendedValue",
    "PV",
    "PHI_PLUS",
    "PHI_MINUS",
    "PSI1",
    "PSI2",
    "PSI3",
    "PSI4",
    "SHAPLEY",
    "BANZHAF",
    "counterexample_value",
    "Witness",
    "AxiomReport",
    "check_axiom",
    "random_game",
    "random_measure",
    "random_product_measure",
    "pv_equals_probabilistic_value",
    "conditional_family",
    "unanimity_deviation",
    "binomial_parameter",
    "measure_for_binomial_semivalue",
]


@dataclass(frozen=True)
class ExtendedValue:
    """A named map from probabilistic games to value vectors."""

    name: str
    evaluate: Callable[[ProbabilisticGame], np.ndarray]

    def __call__(self, G):
        return np.asarray(self.evaluate(G), dtype=np.float64)


def _psi3(G):
    sizes = kernels.popcounts(G.n)
    truncated = np.where(sizes <= 2, G.game.worth, 0.0)
    return prediction_value(ProbabilisticGame(make_table_game(G.n, truncated), G.measure))


def _psi4(G):
    if G.n < 3:
        log.debug("Psi4 evaluated on %d players; only defined for n >= 3", G.n)
    dividends = harsanyi_dividends(G.game).dividends
    carrier = (np.abs(dividends) > DIVIDEND_CUTOFF).astype(np.float64)
    carrier[0] = 0.0
    # sum of u_S over the non-zero dividends, fed through xi (linear in v)
    counts = kernels.subset_zeta(carrier, G.n)
    return prediction_value(ProbabilisticGame(make_table_game(G.n, counts), G.measure))


_COUNTEREXAMPLES = {
    "psi1": lambda G: decisiveness(G, "plus"),
    "psi2": lambda G: prediction_value(G) - decisiveness(G, "plus"),
    "psi3": _psi3,
    "psi4": _psi4,
}


def counterexample_value(kind, G):
    """Evaluate one of the four single-axiom counterexamples ``"psi1".."psi4"``.

    psi1 is the positive decisiveness measure, psi2 is PV minus psi1, psi3
    truncates PV's sums to coalitions of at most two players, and psi4 sums
    PV over the unanimity games with nonzero Harsanyi dividend.
    """
    try:
        fn = _COUNTEREXAMPLES[kind.lower()]
    except KeyError:
        raise PredvalError(f"unknown counterexample {kind!r}") from None
    return fn(G)


PV = ExtendedValue("PV", prediction_value)
PHI_PLUS = ExtendedValue("Phi+", lambda G: decisiveness(G, "plus"))
PHI_MINUS = ExtendedValue("Phi-", lambda G: decisiveness(G, "minus"))
PSI1 = ExtendedValue("Psi1", _COUNTEREXAMPLES["psi1"])
PSI2 = ExtendedValue("Psi2", _COUNTEREXAMPLES["psi2"])
PSI3 = ExtendedValue("Psi3", _psi3)
PSI4 = ExtendedValue("Psi4", _psi4)
SHAPLEY = ExtendedValue("Shapley", lambda G: shapley(G.game))
BANZHAF = ExtendedValue("Banzhaf", lambda G: banzhaf(G.game))


# random inputs -------------------------------------------------------------


def random_game(rng, n):
    """Worths i.i.d. uniform on [-1, 1] with v(empty) = 0."""
    worth = rng.uniform(-1.0, 1.0, 1 << n)
    worth[0] = 0.0
    return make_table_game(n, worth)


def random_measure(rng, n, sparse=False):
    """I.i.d. uniform masses, normalised. ``sparse`` zeroes about half of them."""
    mass = rng.uniform(0.0, 1.0, 1 << n)
    if sparse:
        keep = rng.random(1 << n) < 0.5
        keep[rng.integers(1 << n)] = True
        mass = np.where(keep, mass, 0.0)
    return CoalitionMeasure(n, mass / mass.sum())


def random_product_measure(rng, n, low=0.05, high=0.95):
    return product_measure(rng.uniform(low, high, n))


def _trial_rng(seed, axiom, trial):
    return np.random.default_rng([seed, AXIOMS.index(axiom), trial])


# axiom checks --------------------------------------------------------------


@dataclass
class Witness:
    """Where an axiom check found a violation."""

    description: str
    player: int
    expected: float
    actual: float
    games: tuple = ()

    @property
    def deviation(self):
        return abs(self.expected - self.actual)


@dataclass
class AxiomReport:
    value: str
    axiom: str
    holds: bool
    cases: int
    witness: Optional[Witness] = None
    max_deviation: float = 0.0

    def summary(self):
        verdict = "no violation found" if self.holds else "VIOLATED"
        text = f"{self.value} {self.axiom}: {verdict} ({self.cases} cases, max dev {self.max_deviation:.3g})"
        if self.witness is not None:
            w = self.witness
            text += (
                f"; witness: {w.description}, player {w.player}: "
                f"expected {w.expected:.6g}, got {w.actual:.6g}"
            )
        return text


class _Tracker:
    def __init__(self, value, axiom, tol):
        self.value = value
        self.axiom = axiom
        self.tol = tol
        self.cases = 0
        self.max_dev = 0.0
        self.witness = None

    def compare(self, expected, actual, description, games, players=None):
        self.cases += 1
        expected = np.atleast_1d(np.asarray(expected, dtype=np.float64))
        actual = np.atleast_1d(np.asarray(actual, dtype=np.float64))
        dev = np.abs(expected - actual)
        k = int(np.argmax(dev))
        self.max_dev = max(self.max_dev, float(dev[k]))
        if dev[k] > self.tol and self.witness is None:
            player = players[k] if players is not None else k
            self.witness = Witness(description, int(player), float(expected[k]), float(actual[k]), games)

    def report(self):
        return AxiomReport(
            self.value, self.axiom, self.witness is None, self.cases, self.witness, self.max_dev
        )


def _check_anonymity(value, t, trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, "anonymity", trial)
        n = int(rng.integers(1, 7))
        G = ProbabilisticGame(random_game(rng, n), random_measure(rng, n, sparse=trial % 4 == 3))
        perm = PlayerPermutation(rng.permutation(n))
        H = ProbabilisticGame(permute_game(G.game, perm), permute_measure(G.measure, perm))
        base = value(G)
        moved = value(H)[list(perm.mapping)]
        t.compare(base, moved, f"random n={n}, permutation {list(perm.mapping)}", (G, H))


def _check_linearity(value, t, trials, seed):
    # cancelling dividends: v + (-v) is the zero game
    G = ProbabilisticGame(make_weighted_game([1, 1, 1], 2), random_measure(np.random.default_rng(seed), 3))
    neg = ProbabilisticGame(-G.game, G.measure)
    zero = ProbabilisticGame(G.game + neg.game, G.measure)
    t.compare(value(G) + value(neg), value(zero), "v + (-v) with v = 3-player majority", (G, neg))
    for trial in range(trials):
        rng = _trial_rng(seed, "linearity", trial)
        n = int(rng.integers(1, 7))
        P = random_measure(rng, n, sparse=trial % 4 == 3)
        v, w = random_game(rng, n), random_game(rng, n)
        a, b = rng.uniform(-2.0, 2.0, 2)
        combo = ProbabilisticGame(a * v + b * w, P)
        expected = a * value(ProbabilisticGame(v, P)) + b * value(ProbabilisticGame(w, P))
        t.compare(expected, value(combo), f"random n={n}, a={a:.3f}, b={b:.3f}", (combo,))


def _consistency_case(value, t, G, i, description):
    reduced, index_map = reduce(G, i)
    before = value(G)
    after = value(reduced)
    others = sorted(index_map)
    t.compare(before[others], after[[index_map[j] for j in others]], description, (G, reduced), others)


def _check_consistency(value, t, trials, seed):
    # perfect correlation: P(N) = P(empty) = 1/2 on three players
    n = 3
    mass = np.zeros(1 << n)
    mass[0] = mass[-1] = 0.5
    G = ProbabilisticGame(make_weighted_game([1, 1, 1], 2), CoalitionMeasure(n, mass))
    _consistency_case(value, t, G, 2, "n=3, P(N)=P(empty)=1/2, remove player 3")
    for trial in range(trials):
        rng = _trial_rng(seed, "consistency", trial)
        n = int(rng.integers(2, 7))
        i = int(rng.integers(n))
        worth = random_game(rng, n).worth.copy()
        worth[1 << i] = 0.0
        G = ProbabilisticGame(make_table_game(n, worth), random_measure(rng, n, sparse=trial % 4 == 3))
        _consistency_case(value, t, G, i, f"random n={n}, remove player {i + 1}")


def _check_full_control(value, t, trials, seed):
    game = make_unanimity_game(1, 1)
    fixed = [1.0, 0.5, 1e-3, 0.0]
    rng = _trial_rng(seed, "full_control", 0)
    masses = fixed + list(rng.uniform(0.0, 1.0, trials))
    for p in masses:
        G = ProbabilisticGame(game, CoalitionMeasure(1, [1.0 - p, p]))
        expected = 1.0 if p > 0 else 0.0
        t.compare([expected], value(G), f"n=1, u_1, P({{1}})={p:.6g}", (G,))


def _iddp_case(value, t, P, description):
    for i, j in ((0, 1), (1, 0)):
        G = ProbabilisticGame(make_unanimity_game(2, 1 << j), P)
        expected = condition(P, i, True)[0b11] - condition(P, i, False)[1 << j]
        t.compare([expected], [value(G)[i]], f"{description}, u_{j + 1}", (G,), [i])


def _check_iddp(value, t, trials, seed):
    fixtures = [
        ([0.5, 0.0, 0.0, 0.5], "perfect correlation"),
        ([0.25, 0.25, 0.25, 0.25], "uniform"),
        ([0.0, 0.5, 0.5, 0.0], "perfect anti-correlation"),
        ([0.0, 0.0, 0.0, 1.0], "P(N)=1"),
    ]
    for mass, label in fixtures:
        _iddp_case(value, t, CoalitionMeasure(2, mass), f"n=2, {label}")
    for trial in range(trials):
        rng = _trial_rng(seed, "iddp", trial)
        _iddp_case(value, t, random_measure(rng, 2, sparse=trial % 4 == 3), "random n=2")


_CHECKS = {
    "anonymity": _check_anonymity,
    "linearity": _check_linearity,
    "consistency": _check_consistency,
    "full_control": _check_full_control,
    "iddp": _check_iddp,
}


def check_axiom(value, axiom, trials=200, seed=0, tol=1e-9):
    """Search for a violation of ``axiom`` by the extended value ``value``."""
    if axiom not in _CHECKS:
        raise PredvalError(f"unknown axiom {axiom!r}; choose from {AXIOMS}")
    if trials < 1:
        raise PredvalError("trials must be at least 1")
    t = _Tracker(value.name, axiom, tol)
    _CHECKS[axiom](value, t, trials, seed)
    return t.report()


# probabilistic values vs PV -------------------------------------------------


def conditional_family(P):
    """Inclusive family ``Q_i = P|i``."""
    return ProbabilisticValueFamily("inclusive", tuple(condition(P, i, True) for i in range(P.n)))


def pv_equals_probabilistic_value(P, tol=1e-9):
    """Family ``Q`` with ``Psi(., Q) == xi(., P)`` on all games, or None if none exists.

    Such a family exists exactly when ``P`` is a product measure with all
    marginals strictly between 0 and 1; it is then ``Q_i = P|i``.
    """
    if P.n < 2:
        raise PredvalError("the equivalence is only characterised for n > 1")
    if P.is_degenerate:
        raise MeasureError("all-zero measure")
    if detect_product_measure(P, tol) is None:
        return None
    return conditional_family(P)


def unanimity_deviation(P, family=None):
    """Largest ``|Psi_i(u_S, Q) - xi_i(u_S, P)|`` over all unanimity games.

    ``family`` defaults to ``Q_i = P|i``. Returns ``(deviation, carrier, player)``.
    """
    family = conditional_family(P) if family is None else family
    best = (0.0, 0, 0)
    for carrier in range(1, 1 << P.n):
        game = make_unanimity_game(P.n, carrier)
        diff = np.abs(probabilistic_value(game, family) - prediction_value(ProbabilisticGame(game, P)))
        k = int(np.argmax(diff))
        if diff[k] > best[0]:
            best = (float(diff[k]), carrier, k)
    return best


# semivalues vs PV -----------------------------------------------------------


def binomial_parameter(q, tol=1e-9):
    """``alpha`` with ``q_k = q_0 alpha^k > 0`` for all k, or None.

    With two players every positive ``q`` qualifies (``alpha = q_1 / q_0``);
    with one player every alpha gives the same value and 1.0 is returned.
    """
    if not isinstance(q, SemivalueWeights):
        raise NormalizationError("expected normalised SemivalueWeights")
    weights = q.q
    if any(x <= 0.0 for x in weights):
        return None
    if len(weights) == 1:
        return 1.0
    q0 = weights[0]
    alpha = weights[1] / q0
    for k, x in enumerate(weights):
        if abs(x - q0 * alpha**k) > tol * x:
            return None
    return alpha


def measure_for_binomial_semivalue(alpha, n):
    """Product measure with every marginal ``alpha / (1 + alpha)``."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise PredvalError(f"alpha must be positive, got {alpha}")
    p = alpha / (1.0 + alpha)
    return product_measure([p] * n)


def binomial_weights_normaliser(alpha, n):
    """``q_0`` for the geometric weights with ratio ``alpha``."""
    return 1.0 / sum(comb(n - 1, k) * alpha**k for k in range(n))
