"""Prediction value and classical power indices for probabilistic TU games.

Coalitions are int bitmasks (bit i set iff player i is a member) and games
and measures are dense tables indexed by bitmask.
"""

from .errors import (
    MeasureError,
    NormalizationError,
    NotDependentError,
    ParseError,
    PredvalError,
    SizeGuardError,
)
from .games import *  # noqa: F401,F403
from .games import __all__ as _games_all
from .indices import *  # noqa: F401,F403
from .indices import __all__ as _indices_all
from .measures import *  # noqa: F401,F403
from .measures import __all__ as _measures_all
from .rollcall import *  # noqa: F401,F403
from .rollcall import __all__ as _rollcall_all
from .theory import *  # noqa: F401,F403
from .theory import __all__ as _theory_all
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "PredvalError",
    "SizeGuardError",
    "MeasureError",
    "NotDependentError",
    "NormalizationError",
    "ParseError",
    "BACKEND",
    *_games_all,
    *_measures_all,
    *_indices_all,
    *_theory_all,
    *_rollcall_all,
]
