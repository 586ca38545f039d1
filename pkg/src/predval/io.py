"""JSON formats for games and measures.

Game::

    {"n": 3, "type": "weighted", "weights": [1, 1, 1], "quota": 2}
    {"n": 2, "type": "table", "worth": [0, 0, 0, 1]}
    {"n": 3, "type": "unanimity", "T": [0, 1]}

optionally with ``"names": [...]``. Measure::

    {"type": "uniform"}
    {"type": "product", "p": [0.2, 0.5]}
    {"type": "table", "mass": [...]}
    {"type": "sparse", "entries": [{"coalition": [0, 2], "p": 0.5}, ...]}

Coalitions in JSON are lists of 0-based player indices; tables are indexed
by bitmask.
"""

import json
import os

from .errors import ParseError, PredvalError
from .games import make_table_game, make_unanimity_game, make_weighted_game, members
from .measures import CoalitionMeasure, product_measure, sparse_entries, uniform_measure

__all__ = [
    "game_from_json",
    "game_to_json",
    "measure_from_json",
    "measure_to_json",
    "load_game",
    "load_measure",
    "read_json",
]


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


def _require(obj, key, where):
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


def _index_list(value, n, where):
    if not isinstance(value, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in value):
        raise ParseError(f"{where}: expected a list of player indices")
    bad = [i for i in value if not 0 <= i < n]
    if bad:
        raise ParseError(f"{where}: player indices {bad} out of range for n={n}")
    return value


def game_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("game: expected a JSON object")
    kind = _require(obj, "type", "game")
    names = obj.get("names")
    if kind == "weighted":
        weights = _require(obj, "weights", "game")
        game = make_weighted_game(weights, _require(obj, "quota", "game"), names=names)
        if "n" in obj and obj["n"] != game.n:
            raise ParseError(f"game: n={obj['n']} but {game.n} weights given")
        return game
    n = _require(obj, "n", "game")
    if kind == "table":
        return make_table_game(n, _require(obj, "worth", "game"), names=names)
    if kind == "unanimity":
        T = _index_list(_require(obj, "T", "game"), n, "game.T")
        return make_unanimity_game(n, T, names=names)
    raise ParseError(f"game: unknown type {kind!r}")


def game_to_json(game):
    out = {"n": game.n, "type": game.kind}
    if game.kind == "weighted":
        out.update(weights=list(game.weights), quota=game.quota)
    elif game.kind == "unanimity":
        out["T"] = list(members(game.support, game.n))
    else:
        out["worth"] = game.worth.tolist()
    if game.names is not None:
        out["names"] = list(game.names)
    return out


def measure_from_json(obj, n):
    if not isinstance(obj, dict):
        raise ParseError("measure: expected a JSON object")
    kind = _require(obj, "type", "measure")
    if "n" in obj and obj["n"] != n:
        raise PredvalError(f"measure is for n={obj['n']} but the game has n={n}")
    if kind == "uniform":
        return uniform_measure(n)
    if kind == "product":
        p = _require(obj, "p", "measure")
        if len(p) != n:
            raise PredvalError(f"measure has {len(p)} marginals but the game has n={n}")
        return product_measure(p)
    if kind == "table":
        return CoalitionMeasure(n, _require(obj, "mass", "measure"))
    if kind == "sparse":
        pairs = []
        for k, entry in enumerate(_require(obj, "entries", "measure")):
            where = f"measure.entries[{k}]"
            if not isinstance(entry, dict):
                raise ParseError(f"{where}: expected an object")
            players = _index_list(_require(entry, "coalition", where), n, where)
            pairs.append((players, _require(entry, "p", where)))
        return CoalitionMeasure.from_sparse(n, sparse_entries(n, pairs))
    raise ParseError(f"measure: unknown type {kind!r}")


def measure_to_json(P, names=None):
    """Sparse form, coalitions listed by increasing bitmask."""
    out = {
        "type": "sparse",
        "n": P.n,
        "entries": [
            {"coalition": list(members(s, P.n)), "p": p} for s, p in P.to_sparse().items()
        ],
    }
    if names is not None:
        out["names"] = list(names)
    return out


def load_game(path):
    return game_from_json(read_json(path))


def load_measure(spec, n):
    """``spec`` is a file path, inline JSON, or the shorthand ``uniform``."""
    text = spec.strip()
    if text == "uniform":
        return uniform_measure(n)
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"inline measure: invalid JSON ({exc})") from None
    elif os.path.exists(spec):
        obj = read_json(spec)
    else:
        raise ParseError(f"measure {spec!r} is neither a file nor inline JSON")
    return measure_from_json(obj, n)
