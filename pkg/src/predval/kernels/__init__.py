"""Subset-enumeration kernels with a compiled core and a numpy fallback.

The compiled extension ``_ckernels`` is used when it was built and imports
cleanly; otherwise the numpy implementations in ``_pykernels`` are used.
Set ``PREDVAL_PURE_PYTHON=1`` to force the fallback.

Only float64 tables go through the compiled core. Integer tables (exact
mode) always take the numpy path, which is dtype-generic.
"""

import os

import numpy as np

from . import _pykernels

_compiled = None
if os.environ.get("PREDVAL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

backend = _compiled if _compiled is not None else _pykernels
BACKEND = backend.NAME

__all__ = [
    "BACKEND",
    "available_backends",
    "get_backend",
    "subset_zeta",
    "subset_mobius",
    "superset_zeta",
    "weighted_worth",
    "split_sums",
    "marginal_inside",
    "marginal_outside",
    "popcounts",
]


def available_backends():
    names = [_pykernels.NAME]
    if _compiled is not None:
        names.insert(0, _compiled.NAME)
    return names


def get_backend(name):
    """Return the kernel module called ``name`` ("cython" or "numpy")."""
    if name == _pykernels.NAME:
        return _pykernels
    if _compiled is not None and name == _compiled.NAME:
        return _compiled
    raise ValueError(f"kernel backend {name!r} is not available")


def _pick(*arrays):
    if all(a.dtype == np.float64 and a.flags.c_contiguous for a in arrays):
        return backend
    return _pykernels


def subset_zeta(a, n):
    """b[S] = sum of a[T] over T subset of S."""
    return _pick(a).subset_zeta(a, n)


def subset_mobius(a, n):
    """Inverse of :func:`subset_zeta`."""
    return _pick(a).subset_mobius(a, n)


def superset_zeta(a, n):
    """b[S] = sum of a[T] over T superset of S."""
    return _pick(a).superset_zeta(a, n)


def weighted_worth(weights, quota):
    return backend.weighted_worth(np.asarray(weights, dtype=np.float64), float(quota))


def split_sums(a, n):
    """Per player i: (sum of a[S] over S containing i, sum over S not containing i)."""
    return _pick(a).split_sums(a, n)


def marginal_inside(v, w, n):
    """Per player i: sum over S containing i of w[S] * (v[S] - v[S - i])."""
    return _pick(v, w).marginal_inside(v, w, n)


def marginal_outside(v, w, n):
    """Per player i: sum over S not containing i of w[S] * (v[S + i] - v[S])."""
    return _pick(v, w).marginal_outside(v, w, n)


def popcounts(n):
    return backend.popcounts(n)
