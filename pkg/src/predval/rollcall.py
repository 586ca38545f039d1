"""Roll-call records: parsing, empirical coalition measures, vote correlations.

Each division is encoded as the coalition of players voting yes. Input rows
must be complete yes/no votes; abstentions are not modelled.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .errors import MeasureError, ParseError, PredvalError
from .games import check_size
from .measures import CoalitionMeasure

YES = frozenset({"1", "Y", "y"})
NO = frozenset({"0", "N", "n"})

__all__ = [
    "RollCallDataset",
    "CorrelationMatrix",
    "parse_rollcall_csv",
    "empirical_measure",
    "vote_correlation_matrix",
    "yes_rates",
]


@dataclass(frozen=True)
class RollCallDataset:
    players: tuple
    records: np.ndarray  # int64 yes-camp bitmasks, one per division

    def __post_init__(self):
        object.__setattr__(self, "players", tuple(self.players))
        records = np.asarray(self.records, dtype=np.int64).reshape(-1)
        n = check_size(len(self.players))
        if records.size and (records.min() < 0 or records.max() >= 1 << n):
            raise PredvalError(f"records must be bitmasks below 2**{n}")
        records.setflags(write=False)
        object.__setattr__(self, "records", records)

    @property
    def n(self):
        return len(self.players)

    @property
    def count(self):
        return int(self.records.size)

    def indicators(self):
        """``count x n`` 0/1 matrix: entry ``[r, i]`` is 1 iff player i voted yes."""
        bits = np.arange(self.n, dtype=np.int64)
        return ((self.records[:, None] >> bits) & 1).astype(np.int64)


@dataclass(frozen=True)
class CorrelationMatrix:
    """Pearson correlations; ``defined[i, j]`` is False where a series is constant."""

    players: tuple
    values: np.ndarray  # NaN where undefined
    defined: np.ndarray

    def __getitem__(self, ij):
        return self.values[ij]


def parse_rollcall_csv(stream):
    """Read a roll-call CSV: header of player names, one division per row.

    Cells are ``1/Y/y`` for yes and ``0/N/n`` for no. Errors name the
    1-based file line and column.
    """
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty input: expected a header row of player names") from None
    names = [h.strip() for h in header]
    if not names or all(h == "" for h in names):
        raise ParseError("line 1: empty header")
    if any(h == "" for h in names):
        raise ParseError(f"line 1: blank player name in column {names.index('') + 1}")
    if len(set(names)) != len(names):
        raise ParseError("line 1: duplicate player names")
    try:
        check_size(len(names))
    except PredvalError as exc:
        raise type(exc)(f"line 1: {exc}") from None
    records = []
    for row in reader:
        line = reader.line_num
        if not row or all(c.strip() == "" for c in row):
            continue
        if len(row) != len(names):
            raise ParseError(f"line {line}: expected {len(names)} cells, got {len(row)}")
        bits = 0
        for col, cell in enumerate(row):
            token = cell.strip()
            if token in YES:
                bits |= 1 << col
            elif token not in NO:
                raise ParseError(
                    f"line {line}, column {col + 1} ({names[col]}): unknown vote {cell!r}"
                )
        records.append(bits)
    if not records:
        raise ParseError("no division rows after the header")
    return RollCallDataset(tuple(names), np.array(records, dtype=np.int64))


def empirical_measure(ds, smoothing=0.0):
    """Relative frequency of each division, optionally with additive smoothing."""
    if ds.count < 1:
        raise MeasureError("cannot estimate a measure from an empty dataset")
    smoothing = float(smoothing)
    if not smoothing >= 0.0:
        raise PredvalError(f"smoothing must be non-negative, got {smoothing}")
    size = 1 << ds.n
    counts = np.bincount(ds.records, minlength=size).astype(np.float64)
    return CoalitionMeasure(ds.n, (counts + smoothing) / (ds.count + smoothing * size))


def yes_rates(ds):
    return ds.indicators().mean(axis=0)


def vote_correlation_matrix(ds):
    """Pairwise Pearson correlation of the yes-indicator series.

    Computed from integer co-occurrence counts, so identical series give
    exactly 1 and opposite series exactly -1.
    """
    if ds.count < 2:
        raise PredvalError("need at least two divisions to correlate votes")
    X = ds.indicators()
    m = ds.count
    yes = X.sum(axis=0)
    both = X.T @ X
    cov = m * both - np.outer(yes, yes)  # m^2 times the covariance, exact
    var = np.diag(cov).astype(np.float64)
    defined = np.outer(var > 0, var > 0)
    values = np.full(cov.shape, np.nan)
    denom = np.sqrt(np.outer(var, var))
    values[defined] = np.clip(cov[defined] / denom[defined], -1.0, 1.0)
    values.setflags(write=False)
    defined.setflags(write=False)
    return CorrelationMatrix(ds.players, values, defined)
