"""Probability measures over coalitions and probabilistic games.

A :class:`CoalitionMeasure` is a dense table of ``2**n`` non-negative
masses indexed by coalition bitmask. It is either a proper probability
distribution (total 1) or, only as the result of conditioning on a
null event, identically zero.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from . import kernels
from .errors import MeasureError, NotDependentError, PredvalError
from .games import (
    TUGame,
    check_size,
    coalition,
    make_table_game,
    permutation_image,
)

TOTAL_TOL = 1e-9

__all__ = [
    "CoalitionMeasure",
    "ProbabilisticGame",
    "uniform_measure",
    "product_measure",
    "condition",
    "membership_probabilities",
    "reduce",
    "detect_product_measure",
    "shapley_inducing_measure",
    "permute_measure",
]


def _halves(a, i):
    b = a.reshape(-1, 2, 1 << i)
    return b[:, 0, :], b[:, 1, :]


class CoalitionMeasure:
    """Distribution ``P`` over the ``2**n`` coalitions of ``n`` players."""

    __slots__ = ("n", "mass")

    def __init__(self, n, mass):
        n = check_size(n)
        table = np.array(mass, dtype=np.float64)
        if table.shape != (1 << n,):
            raise MeasureError(f"mass table must have length {1 << n}, got shape {table.shape}")
        if not np.all(np.isfinite(table)) or np.any(table < 0):
            raise MeasureError("masses must be finite and non-negative")
        total = float(table.sum())
        if total != 0.0 and abs(total - 1.0) > TOTAL_TOL:
            raise MeasureError(f"masses sum to {total!r}; expected 1 (or exactly 0)")
        table.setflags(write=False)
        self.n = n
        self.mass = table

    @classmethod
    def from_sparse(cls, n, entries):
        """Build from ``{coalition_bitmask: mass}``; unlisted coalitions get 0."""
        n = check_size(n)
        table = np.zeros(1 << n, dtype=np.float64)
        for bits, p in entries.items():
            if not 0 <= bits < 1 << n:
                raise MeasureError(f"coalition {bits} out of range for n={n}")
            table[bits] += p
        return cls(n, table)

    @property
    def total(self):
        return float(self.mass.sum())

    @property
    def is_degenerate(self):
        return not np.any(self.mass)

    def __getitem__(self, bits):
        return float(self.mass[bits])

    def support(self):
        return [int(s) for s in np.flatnonzero(self.mass)]

    def to_sparse(self):
        return {s: float(self.mass[s]) for s in self.support()}

    def __eq__(self, other):
        if not isinstance(other, CoalitionMeasure):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.mass, other.mass)

    __hash__ = None

    def __repr__(self):
        return f"CoalitionMeasure(n={self.n}, support={len(self.support())})"


@dataclass(frozen=True)
class ProbabilisticGame:
    """The triple ``(N, v, P)``."""

    game: TUGame
    measure: CoalitionMeasure

    def __post_init__(self):
        if self.game.n != self.measure.n:
            raise PredvalError(
                f"game has {self.game.n} players but measure has {self.measure.n}"
            )

    @property
    def n(self):
        return self.game.n


def uniform_measure(n):
    n = check_size(n)
    return CoalitionMeasure(n, np.full(1 << n, 2.0**-n))


def product_measure(p):
    """Independent memberships with marginals ``p[i]``."""
    p = [float(x) for x in p]
    check_size(len(p))
    if any(not 0.0 <= x <= 1.0 for x in p):
        raise MeasureError(f"marginals must lie in [0, 1], got {p}")
    mass = np.ones(1, dtype=np.float64)
    for x in p:
        mass = np.concatenate((mass * (1.0 - x), mass * x))
    return CoalitionMeasure(len(p), mass)


def _check_player(n, i):
    if not isinstance(i, (int, np.integer)) or not 0 <= i < n:
        raise PredvalError(f"player index {i!r} out of range for n={n}")


def condition(P, i, member):
    """``P|i`` (``member=True``) or ``P|not i``; all-zero if the event has probability 0."""
    _check_player(P.n, i)
    mass = np.zeros_like(P.mass)
    lo_out, hi_out = _halves(mass, i)
    lo_in, hi_in = _halves(P.mass, i)
    src, dst = (hi_in, hi_out) if member else (lo_in, lo_out)
    event = src.sum()
    if event != 0.0:
        dst[...] = src / event
    return CoalitionMeasure(P.n, mass)


def membership_probabilities(P):
    """Marginals ``p_i``: total mass of coalitions containing ``i``."""
    if P.is_degenerate:
        raise MeasureError("membership probabilities of an all-zero measure are undefined")
    inside, _ = kernels.split_sums(P.mass, P.n)
    return np.clip(inside, 0.0, 1.0)


def reduce(G, i):
    """Remove dependent player ``i``: merge ``S`` with ``S + i``.

    Returns ``(reduced_game, index_map)`` where ``index_map`` sends old
    player indices (other than ``i``) to their packed indices in the
    reduced game.
    """
    n = G.n
    _check_player(n, i)
    if n < 2:
        raise PredvalError("cannot remove the only player")
    if G.game.value(1 << i) != 0.0:
        raise NotDependentError(
            f"player {i} has nonzero singleton worth {G.game.value(1 << i)}; "
            "the reduced worth of the empty coalition would be nonzero"
        )
    p_out, p_in = _halves(G.measure.mass, i)
    v_out, v_in = _halves(G.game.worth, i)
    merged = (p_out + p_in).reshape(-1)
    weighted = (p_out * v_out + p_in * v_in).reshape(-1)
    worth = np.zeros_like(merged)
    pos = merged > 0
    worth[pos] = weighted[pos] / merged[pos]
    names = None
    if G.game.names is not None:
        names = [x for k, x in enumerate(G.game.names) if k != i]
    reduced = ProbabilisticGame(
        make_table_game(n - 1, worth, names=names),
        CoalitionMeasure(n - 1, merged),
    )
    index_map = {k: (k if k < i else k - 1) for k in range(n) if k != i}
    return reduced, index_map


def detect_product_measure(P, tol=1e-9):
    """Marginals ``p`` (all strictly inside (0, 1)) if ``P`` is their product measure, else None."""
    if P.is_degenerate:
        raise MeasureError("cannot test an all-zero measure for product form")
    p = membership_probabilities(P)
    if np.any(p <= 0.0) or np.any(p >= 1.0):
        return None
    candidate = product_measure(p)
    if np.max(np.abs(candidate.mass - P.mass)) > tol:
        return None
    return p


def shapley_inducing_measure(n, side):
    """Measure under which the conditional decisiveness of ``side`` is the Shapley value.

    ``side="plus"``: ``P(S) = 1 / (s C(n,s) H_n)`` for non-empty ``S``.
    ``side="minus"``: ``P(S) = 1 / ((n-s) C(n,s) H_n)`` for ``S != N``.
    """
    n = check_size(n)
    if side not in ("plus", "minus"):
        raise PredvalError(f"side must be 'plus' or 'minus', got {side!r}")
    harmonic = sum(1.0 / t for t in range(1, n + 1))
    per_size = np.zeros(n + 1)
    for s in range(n + 1):
        k = s if side == "plus" else n - s
        if k > 0:
            per_size[s] = 1.0 / (k * comb(n, s) * harmonic)
    return CoalitionMeasure(n, per_size[kernels.popcounts(n)])


def permute_measure(P, perm):
    """Relabelled measure ``P'`` with ``P'(pi S) = P(S)``."""
    img = permutation_image(perm, P.n)
    mass = np.empty_like(P.mass)
    mass[img] = P.mass
    return CoalitionMeasure(P.n, mass)


def sparse_entries(n, pairs):
    """Turn ``[(players, p), ...]`` into a ``{bitmask: p}`` dict."""
    out = {}
    for players, p in pairs:
        bits = coalition(players)
        out[bits] = out.get(bits, 0.0) + float(p)
    return out
