"""Coalitions, TU games and the unanimity basis.

A coalition is an ``int`` bitmask over players ``0..n-1``: player ``i`` is a
member iff bit ``i`` is set. Games keep a dense worth table of length
``2**n`` indexed by that bitmask. Weighted voting games additionally keep
their weights and quota and only densify on demand.
"""

import os

import numpy as np

from . import kernels
from .errors import PredvalError, SizeGuardError

MAX_PLAYERS = 26

__all__ = [
    "MAX_PLAYERS",
    "max_players",
    "check_size",
    "coalition",
    "members",
    "cardinality",
    "TUGame",
    "make_table_game",
    "make_weighted_game",
    "make_unanimity_game",
    "majority_quota",
    "UnanimityDecomposition",
    "harsanyi_dividends",
    "PlayerPermutation",
    "permutation_image",
    "permute_game",
]


def max_players():
    """Effective player cap; ``COALITION_MAX_N`` may lower it, never raise it."""
    raw = os.environ.get("COALITION_MAX_N")
    if raw is None or raw.strip() == "":
        return MAX_PLAYERS
    try:
        limit = int(raw)
    except ValueError:
        raise PredvalError(f"COALITION_MAX_N must be an integer, got {raw!r}") from None
    return max(1, min(limit, MAX_PLAYERS))


def check_size(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise PredvalError(f"player count must be a positive integer, got {n!r}")
    limit = max_players()
    if n > limit:
        raise SizeGuardError(f"{n} players exceeds the limit of {limit}")
    return int(n)


def coalition(players):
    """Bitmask for an iterable of player indices."""
    bits = 0
    for i in players:
        if i < 0:
            raise PredvalError(f"negative player index {i}")
        bits |= 1 << int(i)
    return bits


def members(bits, n=None):
    """Sorted tuple of the player indices in ``bits``."""
    n = bits.bit_length() if n is None else n
    return tuple(i for i in range(n) if bits >> i & 1)


def cardinality(bits):
    return bin(bits).count("1")


def _readonly(a):
    a.setflags(write=False)
    return a


class TUGame:
    """A TU game ``(N, v)`` with ``v(empty) = 0``.

    Use :func:`make_table_game`, :func:`make_weighted_game` or
    :func:`make_unanimity_game` rather than calling this directly.
    ``kind`` is one of ``"table"``, ``"weighted"``, ``"unanimity"``.
    """

    __slots__ = ("n", "kind", "weights", "quota", "support", "names", "_worth")

    def __init__(self, n, kind, *, worth=None, weights=None, quota=None, support=None, names=None):
        self.n = check_size(n)
        self.kind = kind
        self.weights = weights
        self.quota = quota
        self.support = support
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != self.n:
                raise PredvalError(f"expected {self.n} player names, got {len(names)}")
        self.names = names
        self._worth = worth

    @property
    def worth(self):
        """Read-only float64 worth table of length ``2**n``."""
        if self._worth is None:
            if self.kind == "weighted":
                table = kernels.weighted_worth(self.weights, self.quota)
            else:
                table = _unanimity_table(self.n, self.support)
            self._worth = _readonly(table)
        return self._worth

    def value(self, bits):
        """Worth of the coalition ``bits``."""
        if not 0 <= bits < 1 << self.n:
            raise PredvalError(f"coalition {bits} out of range for n={self.n}")
        if self._worth is None and self.kind == "weighted":
            total = sum(w for i, w in enumerate(self.weights) if bits >> i & 1)
            return 1.0 if total >= self.quota else 0.0
        if self._worth is None and self.kind == "unanimity":
            return 1.0 if bits & self.support == self.support else 0.0
        return float(self.worth[bits])

    def is_integer_valued(self):
        w = self.worth
        return bool(np.all(np.isfinite(w)) and np.all(w == np.round(w)))

    def exact_worth(self):
        """Worth table as int64 for integer-valued games (exact arithmetic)."""
        if not self.is_integer_valued():
            raise PredvalError("game is not integer-valued")
        return self.worth.astype(np.int64)

    def player_name(self, i):
        return self.names[i] if self.names is not None else str(i + 1)

    def _combine(self, other, a, b):
        if not isinstance(other, TUGame):
            return NotImplemented
        if other.n != self.n:
            raise PredvalError(f"cannot combine games on {self.n} and {other.n} players")
        return make_table_game(self.n, a * self.worth + b * other.worth, names=self.names)

    def __add__(self, other):
        return self._combine(other, 1.0, 1.0)

    def __sub__(self, other):
        return self._combine(other, 1.0, -1.0)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, np.integer, np.floating)):
            return NotImplemented
        return make_table_game(self.n, float(scalar) * self.worth, names=self.names)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0

    def __eq__(self, other):
        if not isinstance(other, TUGame):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.worth, other.worth)

    __hash__ = None

    def __repr__(self):
        if self.kind == "weighted":
            return f"TUGame(n={self.n}, weights={list(self.weights)}, quota={self.quota})"
        if self.kind == "unanimity":
            return f"TUGame(n={self.n}, unanimity={list(members(self.support, self.n))})"
        return f"TUGame(n={self.n}, table)"


def _unanimity_table(n, support):
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx & support) == support).astype(np.float64)


def make_table_game(n, worth, names=None):
    """Game from a dense worth table indexed by coalition bitmask."""
    n = check_size(n)
    table = np.array(worth, dtype=np.float64)
    if table.shape != (1 << n,):
        raise PredvalError(f"worth table must have length {1 << n}, got shape {table.shape}")
    if not np.all(np.isfinite(table)):
        raise PredvalError("worth table contains non-finite values")
    if table[0] != 0.0:
        raise PredvalError(f"worth of the empty coalition must be 0, got {table[0]}")
    return TUGame(n, "table", worth=_readonly(table), names=names)


def majority_quota(weights):
    """Simple-majority quota ``floor(W/2) + 1`` for total weight ``W``."""
    return float(np.floor(float(np.sum(weights)) / 2.0) + 1.0)


def make_weighted_game(weights, quota, names=None):
    """Weighted voting game: ``v(S) = 1`` iff the weight of ``S`` reaches ``quota``."""
    w = tuple(float(x) for x in weights)
    if not w:
        raise PredvalError("weighted game needs at least one weight")
    if any(not np.isfinite(x) or x < 0 for x in w):
        raise PredvalError("weights must be finite and non-negative")
    quota = float(quota)
    if not np.isfinite(quota) or quota <= 0:
        raise PredvalError(f"quota must be positive, got {quota}")
    return TUGame(len(w), "weighted", weights=w, quota=quota, names=names)


def make_unanimity_game(n, T, names=None):
    """Unanimity game ``u_T``: worth 1 exactly on supersets of ``T``.

    ``T`` is a bitmask or an iterable of player indices.
    """
    n = check_size(n)
    bits = T if isinstance(T, (int, np.integer)) else coalition(T)
    bits = int(bits)
    if bits == 0:
        raise PredvalError("unanimity game needs a non-empty carrier")
    if bits >= 1 << n:
        raise PredvalError(f"carrier {members(bits)} is not a subset of {n} players")
    return TUGame(n, "unanimity", support=bits, names=names)


class UnanimityDecomposition:
    """Harsanyi dividends: ``v = sum over T of dividends[T] * u_T``.

    ``dividends`` is a dense table indexed by bitmask; entry 0 is always 0.
    """

    __slots__ = ("n", "dividends")

    def __init__(self, n, dividends):
        self.n = n
        self.dividends = _readonly(np.asarray(dividends))

    def __getitem__(self, bits):
        return self.dividends[bits]

    def nonzero(self, tol=0.0):
        """``(coalition, dividend)`` pairs with ``|dividend| > tol``, by bitmask."""
        idx = np.flatnonzero(np.abs(self.dividends) > tol)
        return [(int(s), self.dividends[s].item()) for s in idx if s != 0]

    def as_dict(self, tol=0.0):
        return dict(self.nonzero(tol))

    def reconstruct(self):
        """Worth table rebuilt from the dividends (subset-sum transform)."""
        return kernels.subset_zeta(self.dividends, self.n)


def harsanyi_dividends(game, exact=False):
    """Möbius inversion of the worth table, in O(n 2^n).

    With ``exact=True`` the game must be integer-valued and the transform
    runs in int64 arithmetic.
    """
    table = game.exact_worth() if exact else game.worth
    return UnanimityDecomposition(game.n, kernels.subset_mobius(table, game.n))


class PlayerPermutation:
    """Bijection on ``0..n-1``; ``mapping[i]`` is the new label of player ``i``."""

    __slots__ = ("mapping",)

    def __init__(self, mapping):
        mapping = tuple(int(x) for x in mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise PredvalError(f"{list(mapping)} is not a permutation of 0..{len(mapping) - 1}")
        self.mapping = mapping

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def swap(cls, n, i, j):
        m = list(range(n))
        m[i], m[j] = m[j], m[i]
        return cls(m)

    @property
    def n(self):
        return len(self.mapping)

    def __call__(self, i):
        return self.mapping[i]

    def apply(self, bits):
        """Image ``pi(S)`` of a coalition bitmask."""
        out = 0
        for i, j in enumerate(self.mapping):
            if bits >> i & 1:
                out |= 1 << j
        return out

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return PlayerPermutation(inv)

    def __repr__(self):
        return f"PlayerPermutation({list(self.mapping)})"


def permutation_image(perm, n):
    """Array ``img`` with ``img[S] = pi(S)`` for every coalition ``S``."""
    if perm.n != n:
        raise PredvalError(f"permutation acts on {perm.n} players, game has {n}")
    img = np.zeros(1, dtype=np.int64)
    for i in range(n):
        img = np.concatenate((img, img | (1 << perm.mapping[i])))
    return img


def permute_game(game, perm):
    """Relabelled game ``v'`` with ``v'(pi S) = v(S)``."""
    img = permutation_image(perm, game.n)
    names = None
    if game.names is not None:
        names = [None] * game.n
        for i, j in enumerate(perm.mapping):
            names[j] = game.names[i]
    if game.kind == "weighted":
        weights = [0.0] * game.n
        for i, j in enumerate(perm.mapping):
            weights[j] = game.weights[i]
        return make_weighted_game(weights, game.quota, names=names)
    if game.kind == "unanimity":
        return make_unanimity_game(game.n, perm.apply(game.support), names=names)
    table = np.empty(1 << game.n, dtype=np.float64)
    table[img] = game.worth
    return make_table_game(game.n, table, names=names)
