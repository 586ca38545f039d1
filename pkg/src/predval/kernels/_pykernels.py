"""Vectorised numpy implementations of the subset kernels.

Every kernel takes a table indexed by coalition bitmask (length ``2**n``).
Reshaping such a table to ``(-1, 2, 2**i)`` puts the coalitions without
player ``i`` in ``[:, 0, :]`` and their partners ``S | 1 << i`` in
``[:, 1, :]`` at the same position, which is all the kernels need.

These work for any numeric dtype, so they also serve exact integer mode.
"""

import numpy as np

NAME = "numpy"


def _halves(a, i):
    b = a.reshape(-1, 2, 1 << i)
    return b[:, 0, :], b[:, 1, :]


def subset_zeta(a, n):
    out = np.array(a, copy=True)
    for i in range(n):
        lo, hi = _halves(out, i)
        hi += lo
    return out


def subset_mobius(a, n):
    out = np.array(a, copy=True)
    for i in range(n):
        lo, hi = _halves(out, i)
        hi -= lo
    return out


def superset_zeta(a, n):
    out = np.array(a, copy=True)
    for i in range(n):
        lo, hi = _halves(out, i)
        lo += hi
    return out


def weighted_worth(weights, quota):
    totals = np.zeros(1, dtype=np.float64)
    for w in weights:
        totals = np.concatenate((totals, totals + w))
    return (totals >= quota).astype(np.float64)


def split_sums(a, n):
    inside = np.empty(n, dtype=np.float64)
    outside = np.empty(n, dtype=np.float64)
    for i in range(n):
        lo, hi = _halves(a, i)
        outside[i] = lo.sum()
        inside[i] = hi.sum()
    return inside, outside


def marginal_inside(v, w, n):
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        v_lo, v_hi = _halves(v, i)
        _, w_hi = _halves(w, i)
        out[i] = np.sum(w_hi * (v_hi - v_lo))
    return out


def marginal_outside(v, w, n):
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        v_lo, v_hi = _halves(v, i)
        w_lo, _ = _halves(w, i)
        out[i] = np.sum(w_lo * (v_hi - v_lo))
    return out


def popcounts(n):
    counts = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        counts = np.concatenate((counts, counts + 1))
    return counts
