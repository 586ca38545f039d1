"""Extended values and TU values.

Everything here enumerates the full ``2**n`` table; there is no sampling.
Conditional expectations over a null event (``P|i`` when no coalition
containing ``i`` has mass) contribute 0.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from . import kernels
from .errors import MeasureError, NormalizationError, PredvalError
from .measures import CoalitionMeasure, ProbabilisticGame, _halves

NORMALIZATION_TOL = 1e-9

__all__ = [
    "prediction_value",
    "decisiveness",
    "shapley",
    "banzhaf",
    "SemivalueWeights",
    "semivalue",
    "binomial_semivalue",
    "ProbabilisticValueFamily",
    "probabilistic_value",
]


def _ratio(num, den):
    out = np.zeros_like(num)
    np.divide(num, den, out=out, where=den != 0.0)
    return out


def prediction_value(G: ProbabilisticGame) -> np.ndarray:
    """``xi_i = E[v | i in S] - E[v | i not in S]`` for every player."""
    n = G.n
    v = G.game.worth
    P = G.measure.mass
    p_in, p_out = kernels.split_sums(P, n)
    vp_in, vp_out = kernels.split_sums(v * P, n)
    return _ratio(vp_in, p_in) - _ratio(vp_out, p_out)


def decisiveness(G: ProbabilisticGame, side: str) -> np.ndarray:
    """Expected marginal contribution given membership (``"plus"``) or not (``"minus"``)."""
    n = G.n
    v = G.game.worth
    P = G.measure.mass
    p_in, p_out = kernels.split_sums(P, n)
    if side == "plus":
        return _ratio(kernels.marginal_inside(v, P, n), p_in)
    if side == "minus":
        return _ratio(kernels.marginal_outside(v, P, n), p_out)
    raise PredvalError(f"side must be 'plus' or 'minus', got {side!r}")


@dataclass(frozen=True)
class SemivalueWeights:
    """Size weights ``q_0..q_{n-1}`` with ``sum_k C(n-1, k) q_k = 1``."""

    q: tuple

    def __post_init__(self):
        q = tuple(float(x) for x in self.q)
        object.__setattr__(self, "q", q)
        if not q:
            raise NormalizationError("semivalue weights must be non-empty")
        if any(not np.isfinite(x) or x < 0 for x in q):
            raise NormalizationError(f"semivalue weights must be finite and non-negative: {q}")
        if not any(q):
            raise NormalizationError("semivalue weights must not all be zero")
        n = len(q)
        total = sum(comb(n - 1, k) * x for k, x in enumerate(q))
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NormalizationError(f"sum of C({n - 1},k) q_k is {total!r}, not 1")

    @property
    def n(self):
        return len(self.q)

    @classmethod
    def shapley(cls, n):
        return cls(tuple(1.0 / (n * comb(n - 1, k)) for k in range(n)))

    @classmethod
    def banzhaf(cls, n):
        return cls((2.0 ** -(n - 1),) * n)

    @classmethod
    def binomial(cls, n, p):
        if not 0.0 < p < 1.0:
            raise PredvalError(f"binomial parameter must lie in (0, 1), got {p}")
        return cls(tuple(p**k * (1.0 - p) ** (n - k - 1) for k in range(n)))


def semivalue(game, q: SemivalueWeights) -> np.ndarray:
    """``f_i = sum over S not containing i of q_|S| (v(S+i) - v(S))``."""
    n = game.n
    if q.n != n:
        raise PredvalError(f"weights are for {q.n} players, game has {n}")
    per_size = np.append(np.asarray(q.q, dtype=np.float64), 0.0)
    w = per_size[kernels.popcounts(n)]
    return kernels.marginal_outside(game.worth, w, n)


def shapley(game) -> np.ndarray:
    return semivalue(game, SemivalueWeights.shapley(game.n))


def banzhaf(game) -> np.ndarray:
    return semivalue(game, SemivalueWeights.banzhaf(game.n))


def binomial_semivalue(game, p) -> np.ndarray:
    """Semivalue with ``q_k = p^k (1-p)^(n-k-1)``, ``0 < p < 1``."""
    return semivalue(game, SemivalueWeights.binomial(game.n, float(p)))


@dataclass(frozen=True)
class ProbabilisticValueFamily:
    """One measure per player for a probabilistic value.

    ``convention="inclusive"``: ``measures[i]`` lives on coalitions that
    contain ``i`` and weights ``v(S) - v(S - i)``.
    ``convention="exclusive"``: ``measures[i]`` lives on coalitions without
    ``i`` and weights ``v(S + i) - v(S)``.
    """

    convention: str
    measures: tuple

    def __post_init__(self):
        measures = tuple(self.measures)
        object.__setattr__(self, "measures", measures)
        if self.convention not in ("inclusive", "exclusive"):
            raise PredvalError(f"convention must be 'inclusive' or 'exclusive', got {self.convention!r}")
        if not measures:
            raise PredvalError("family needs one measure per player")
        n = len(measures)
        for i, Q in enumerate(measures):
            if not isinstance(Q, CoalitionMeasure) or Q.n != n:
                raise MeasureError(f"measure {i} is not a coalition measure on {n} players")
            if Q.is_degenerate:
                raise MeasureError(f"measure {i} is all-zero")
            lo, hi = _halves(Q.mass, i)
            off_support = lo if self.convention == "inclusive" else hi
            if np.any(off_support != 0.0):
                raise MeasureError(f"measure {i} puts mass outside its {self.convention} support")

    @property
    def n(self):
        return len(self.measures)


def probabilistic_value(game, fam: ProbabilisticValueFamily) -> np.ndarray:
    n = game.n
    if fam.n != n:
        raise PredvalError(f"family is for {fam.n} players, game has {n}")
    v = game.worth
    out = np.empty(n)
    for i, Q in enumerate(fam.measures):
        v_lo, v_hi = _halves(v, i)
        q_lo, q_hi = _halves(Q.mass, i)
        weights = q_hi if fam.convention == "inclusive" else q_lo
        out[i] = np.sum(weights * (v_hi - v_lo))
    return out
