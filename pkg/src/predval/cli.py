"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size guard.
"""

import argparse
import json
import sys

import numpy as np

from . import kernels
from .errors import PredvalError, SizeGuardError
from .games import harsanyi_dividends, members
from .indices import (
    SemivalueWeights,
    banzhaf,
    binomial_semivalue,
    decisiveness,
    prediction_value,
    semivalue,
    shapley,
)
from .io import load_game, load_measure, measure_to_json
from .measures import ProbabilisticGame, membership_probabilities
from .rollcall import empirical_measure, parse_rollcall_csv, vote_correlation_matrix
from .verify import run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_SIZE = 3

INDEX_NAMES = ("pv", "shapley", "banzhaf", "phi_plus", "phi_minus", "semivalue", "binomial")
NEEDS_MEASURE = {"pv", "phi_plus", "phi_minus"}
DECOMPOSE_MAX_N = 20


def _player_labels(n, names):
    return list(names) if names is not None else [str(i + 1) for i in range(n)]


def _format_coalition(bits, labels):
    return "{" + ",".join(labels[i] for i in members(bits, len(labels))) + "}"


def _format_number(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if float(x).is_integer():
        return str(int(x))
    return f"{x:.12g}"


def _parse_indices(text):
    names = [s.strip().lower() for s in text.split(",") if s.strip()]
    unknown = [s for s in names if s not in INDEX_NAMES]
    if unknown:
        raise PredvalError(f"unknown index {unknown[0]!r}; choose from {', '.join(INDEX_NAMES)}")
    if not names:
        raise PredvalError("no indices selected")
    return names


def _compute(name, game, G, args):
    if name == "pv":
        return prediction_value(G)
    if name == "phi_plus":
        return decisiveness(G, "plus")
    if name == "phi_minus":
        return decisiveness(G, "minus")
    if name == "shapley":
        return shapley(game)
    if name == "banzhaf":
        return banzhaf(game)
    if name == "semivalue":
        if args.q is None:
            raise PredvalError("index 'semivalue' needs --q")
        q = [float(x) for x in args.q.split(",")]
        return semivalue(game, SemivalueWeights(tuple(q)))
    if name == "binomial":
        if args.p is None:
            raise PredvalError("index 'binomial' needs --p")
        return binomial_semivalue(game, args.p)
    raise AssertionError(name)


def cmd_value(args, out):
    game = load_game(args.game)
    indices = _parse_indices(args.indices)
    G = None
    if args.measure is not None:
        G = ProbabilisticGame(game, load_measure(args.measure, game.n))
    elif NEEDS_MEASURE.intersection(indices):
        raise PredvalError(f"indices {sorted(NEEDS_MEASURE.intersection(indices))} need --measure")
    columns = {name: _compute(name, game, G, args) for name in indices}
    labels = _player_labels(game.n, game.names)
    if args.out == "json":
        rows = [
            {"player": labels[i], "index": name, "value": float(columns[name][i])}
            for i in range(game.n)
            for name in indices
        ]
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        width = max(6, *(len(x) for x in labels))
        out.write(f"{'player':<{width}}" + "".join(f"  {name:>10}" for name in indices) + "\n")
        for i in range(game.n):
            cells = "".join(f"  {columns[name][i]:>10.6f}" for name in indices)
            out.write(f"{labels[i]:<{width}}{cells}\n")
    return EXIT_OK


def cmd_ingest(args, out):
    try:
        with open(args.rollcall, encoding="utf-8", newline="") as fh:
            ds = parse_rollcall_csv(fh)
    except OSError as exc:
        raise PredvalError(f"{args.rollcall}: {exc.strerror}") from None
    P = empirical_measure(ds, args.smoothing)
    payload = json.dumps(measure_to_json(P, names=ds.players), indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    rates = membership_probabilities(P) if args.smoothing == 0 else ds.indicators().mean(axis=0)
    corr = vote_correlation_matrix(ds) if ds.count >= 2 else None
    if args.out == "json":
        summary = {
            "records": ds.count,
            "players": list(ds.players),
            "yes_rates": [float(x) for x in rates],
            "correlation": None
            if corr is None
            else [[float(x) if d else None for x, d in zip(row, drow)] for row, drow in zip(corr.values, corr.defined)],
        }
        if not args.output:
            summary["measure"] = measure_to_json(P)
        out.write(json.dumps(summary, indent=2) + "\n")
        return EXIT_OK
    out.write(f"records: {ds.count}\n")
    width = max(6, *(len(x) for x in ds.players))
    out.write("yes rates:\n")
    for name, r in zip(ds.players, rates):
        out.write(f"  {name:<{width}}  {r:.6f}\n")
    if corr is None:
        out.write("correlation: needs at least 2 records\n")
    else:
        out.write("correlation:\n")
        out.write(" " * (width + 2) + "".join(f"  {name:>{max(9, len(name))}}" for name in ds.players) + "\n")
        for i, name in enumerate(ds.players):
            cells = []
            for j, other in enumerate(ds.players):
                w = max(9, len(other))
                cells.append(f"  {corr.values[i, j]:>{w}.3f}" if corr.defined[i, j] else f"  {'n/a':>{w}}")
            out.write(f"  {name:<{width}}" + "".join(cells) + "\n")
    if not args.output:
        out.write(payload)
    return EXIT_OK


def cmd_verify(args, out):
    results = run_suite(seed=args.seed, trials=args.trials, tol=args.tol)
    out.write(f"kernel backend: {kernels.BACKEND}; seed {args.seed}, trials {args.trials}, tol {args.tol:g}\n")
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks behaved as expected\n")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_decompose(args, out):
    game = load_game(args.game)
    if game.n > DECOMPOSE_MAX_N:
        raise SizeGuardError(f"decompose prints at most {DECOMPOSE_MAX_N} players, game has {game.n}")
    exact = game.is_integer_valued()
    decomposition = harsanyi_dividends(game, exact=exact)
    rows = decomposition.nonzero(0 if exact else args.tol)
    labels = _player_labels(game.n, game.names)
    if not rows:
        out.write("no nonzero dividends\n")
    for bits, dividend in rows:
        out.write(f"{_format_coalition(bits, labels)}: {_format_number(dividend)}\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="predval",
        description="Prediction value and power indices for probabilistic TU games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="compute indices for a game")
    p.add_argument("--game", required=True, help="game JSON file")
    p.add_argument("--measure", help="measure JSON file, inline JSON, or 'uniform'")
    p.add_argument("--indices", default="shapley,banzhaf", help=f"comma list from {','.join(INDEX_NAMES)}")
    p.add_argument("--q", help="comma list of semivalue weights q_0..q_{n-1}")
    p.add_argument("--p", type=float, help="binomial semivalue parameter in (0, 1)")
    p.add_argument("--out", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("ingest", help="estimate a coalition measure from roll-call CSV")
    p.add_argument("rollcall", help="CSV with a header of player names and one division per row")
    p.add_argument("--output", "-o", help="write the sparse measure JSON here")
    p.add_argument("--smoothing", type=float, default=0.0)
    p.add_argument("--out", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="print nonzero Harsanyi dividends")
    p.add_argument("--game", required=True)
    p.add_argument("--tol", type=float, default=1e-9, help="cutoff for non-integer games")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (PredvalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
