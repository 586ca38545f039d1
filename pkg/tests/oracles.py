"""Slow reference implementations that share no code with the package.

Everything loops over coalitions explicitly, and the exact versions work in
Fractions so they can serve as ground truth for the fast transforms.
"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial


def popcount(s):
    return bin(s).count("1")


def weighted_worth(weights, quota):
    n = len(weights)
    return [int(sum(w for i, w in enumerate(weights) if s >> i & 1) >= quota) for s in range(1 << n)]


def naive_mobius(worth, n):
    """Harsanyi dividends by the double loop over T and S subset of T: O(4^n)."""
    out = []
    for t in range(1 << n):
        total = 0
        for s in range(1 << n):
            if s & t == s:
                sign = -1 if (popcount(t) - popcount(s)) % 2 else 1
                total += sign * worth[s]
        out.append(total)
    return out


def shapley_by_orderings(worth, n):
    """Average marginal contribution over all n! orderings (Fractions)."""
    phi = [Fraction(0)] * n
    for order in permutations(range(n)):
        s = 0
        for i in order:
            phi[i] += Fraction(worth[s | 1 << i]) - Fraction(worth[s])
            s |= 1 << i
    return [x / factorial(n) for x in phi]


def shapley_by_formula(worth, n):
    phi = [Fraction(0)] * n
    for i in range(n):
        for s in range(1 << n):
            if not s >> i & 1:
                k = popcount(s)
                phi[i] += Fraction(factorial(k) * factorial(n - k - 1), factorial(n)) * (
                    Fraction(worth[s | 1 << i]) - Fraction(worth[s])
                )
    return phi


def banzhaf(worth, n):
    out = []
    for i in range(n):
        swings = sum(Fraction(worth[s | 1 << i]) - Fraction(worth[s]) for s in range(1 << n) if not s >> i & 1)
        out.append(swings / 2 ** (n - 1))
    return out


def semivalue(worth, n, q):
    out = []
    for i in range(n):
        total = 0.0
        for s in range(1 << n):
            if not s >> i & 1:
                total += q[popcount(s)] * (worth[s | 1 << i] - worth[s])
        out.append(total)
    return out


def prediction_value(worth, mass, n):
    """E[v | i in S] - E[v | i not in S], a zero-probability side counting as 0."""
    out = []
    for i in range(n):
        p_in = sum(mass[s] for s in range(1 << n) if s >> i & 1)
        p_out = sum(mass[s] for s in range(1 << n) if not s >> i & 1)
        e_in = sum(mass[s] * worth[s] for s in range(1 << n) if s >> i & 1)
        e_out = sum(mass[s] * worth[s] for s in range(1 << n) if not s >> i & 1)
        out.append((e_in / p_in if p_in else 0) - (e_out / p_out if p_out else 0))
    return out


def decisiveness(worth, mass, n, side):
    out = []
    for i in range(n):
        num = den = 0
        for s in range(1 << n):
            inside = bool(s >> i & 1)
            if inside != (side == "plus"):
                continue
            swing = worth[s | 1 << i] - worth[s & ~(1 << i)]
            num += mass[s] * swing
            den += mass[s]
        out.append(num / den if den else 0)
    return out


def product_mass(p):
    n = len(p)
    out = []
    for s in range(1 << n):
        x = 1
        for i in range(n):
            x *= p[i] if s >> i & 1 else 1 - p[i]
        out.append(x)
    return out


def shapley_weights(n):
    return [Fraction(1, n * comb(n - 1, k)) for k in range(n)]


def pearson(x, y):
    m = len(x)
    mx, my = sum(x) / m, sum(y) / m
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    return sxy / (sxx * syy) ** 0.5
