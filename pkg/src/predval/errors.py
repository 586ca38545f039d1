"""Exception hierarchy. All are ValueErrors so callers can catch broadly."""


class PredvalError(ValueError):
    """Base class for invalid inputs to the library."""


class SizeGuardError(PredvalError):
    """Player count exceeds the dense-table limit."""


class MeasureError(PredvalError):
    """A coalition measure is malformed or unusable for the operation."""


class NotDependentError(PredvalError):
    """Reduction was requested for a player whose singleton worth is nonzero."""


class NormalizationError(PredvalError):
    """Semivalue weights do not satisfy the normalisation constraint."""


class ParseError(PredvalError):
    """An input file could not be parsed."""
