"""JSON (de)serialization of events, states and ensembles.

Floats are written with 17 significant digits so every value round-trips
exactly; non-finite floats use the ``Infinity`` / ``NaN`` spellings that
Python's ``json`` module reads back.
"""

from __future__ import annotations

import json
import math
from typing import Any

import numpy as np

from .amplitudes import Path, PathEnsemble, PathSegment
from .fourmomentum import MassiveState, TachyonState
from .kinematics import SpacetimeEvent, SuperluminalCoords


def format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        return json.dumps(bool(obj) if obj is not None else None)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _number(value) -> float:
    if isinstance(value, str):
        return float(value)  # accepts "inf", "-inf"
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"expected a number, got {value!r}")
    return float(value)


def _vector(value) -> list[float]:
    if not isinstance(value, list) or len(value) != 3:
        raise ValueError(f"expected a 3-component list, got {value!r}")
    return [_number(v) for v in value]


def event_to_json(e: SpacetimeEvent) -> dict:
    return {"t": e.t, "x": e.x, "y": e.y, "z": e.z}


def event_from_json(data: dict) -> SpacetimeEvent:
    if not isinstance(data, dict) or "t" not in data or "x" not in data:
        raise ValueError(f"an event needs at least t and x: {data!r}")
    return SpacetimeEvent(_number(data["t"]), _number(data["x"]), _number(data.get("y", 0.0)), _number(data.get("z", 0.0)))


def superluminal_to_json(coords: SuperluminalCoords) -> dict:
    return {"chi": coords.chi, "tau": list(coords.tau)}


def state_to_json(state) -> dict:
    if isinstance(state, TachyonState):
        return {"mu": state.mu, "w": state.w.tolist(), "s": state.s.tolist(), "pseudo": state.pseudo}
    if isinstance(state, MassiveState):
        return {"m": state.m, "v": state.v.tolist()}
    raise TypeError(f"cannot serialize {type(state).__name__}")


def state_from_json(data: dict, c: float = 1.0):
    if not isinstance(data, dict):
        raise ValueError("a state must be a JSON object")
    if "mu" in data:
        return TachyonState(_number(data["mu"]), _vector(data["w"]), _vector(data["s"]), bool(data.get("pseudo", False)), c=c)
    if "m" in data:
        return MassiveState(_number(data["m"]), _vector(data["v"]), c=c)
    raise ValueError("a state needs either 'mu' (tachyon) or 'm' (massive)")


def ensemble_to_json(ensemble: PathEnsemble) -> dict:
    return {
        "source": event_to_json(ensemble.source),
        "sink": event_to_json(ensemble.sink),
        "paths": [
            [
                {"start": event_to_json(s.start), "end": event_to_json(s.end), "E": s.energy, "p": s.momentum.tolist()}
                for s in path.segments
            ]
            for path in ensemble.paths
        ],
    }


def ensemble_from_json(data: dict) -> PathEnsemble:
    if not isinstance(data, dict) or "paths" not in data:
        raise ValueError("an ensemble needs 'source', 'sink' and 'paths'")
    paths = []
    for raw in data["paths"]:
        segments = tuple(
            PathSegment(event_from_json(s["start"]), event_from_json(s["end"]), _number(s["E"]), _vector(s["p"])) for s in raw
        )
        paths.append(Path(segments))
    return PathEnsemble(event_from_json(data["source"]), event_from_json(data["sink"]), tuple(paths))
