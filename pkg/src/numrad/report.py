"""Deterministic JSON reports.

Schema: {command, config, results: [{id, verdict, value, gap,
witness: {x, xstar, lambda_or_alpha, attained}, tol, margin}], seed,
version, timestamp}.  Floats are printed with 17 significant digits
(round-trip exact), complex numbers as [re, im] pairs, numpy scalars and
arrays as plain lists.  Two runs with the same inputs and seed produce
byte-identical files apart from the timestamp field.
"""

from __future__ import annotations

import datetime
import json

import numpy as np

from . import __version__


def _fmt_float(x: float) -> str:
    if np.isnan(x):
        return '"nan"'
    if np.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    s = "%.17g" % x
    # make every float visibly a float
    if "." not in s and "e" not in s and "n" not in s:
        s += ".0"
    return s


def _encode(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return "[%s, %s]" % (_fmt_float(obj.real), _fmt_float(obj.imag))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return _encode(obj.tolist())
    if isinstance(obj, dict):
        items = ("%s: %s" % (json.dumps(str(k)), _encode(v)) for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__} in a report")


def dumps(payload: dict) -> str:
    return _encode(payload) + "\n"


def write(path: str, payload: dict) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(payload))


def witness_dict(w) -> dict | None:
    """Serialize a RadiusWitness or RelationWitness into the report shape."""
    if w is None:
        return None
    return {
        "x": getattr(w, "x", None),
        "xstar": getattr(w, "xstar", None),
        "lambda_or_alpha": getattr(w, "scalar", None),
        "attained": getattr(w, "attained", None),
    }


def result_entry(rid: str, verdict=None, value=None, gap=None, witness=None,
                 tol=None, margin=None, **extra) -> dict:
    out = {
        "id": rid,
        "verdict": verdict,
        "value": value,
        "gap": gap,
        "witness": witness_dict(witness) if witness is not None
                   and not isinstance(witness, dict) else witness,
        "tol": tol,
        "margin": margin,
    }
    out.update(extra)
    return out


def build(command: str, config: dict, results: list, seed: int | None) -> dict:
    return {
        "command": command,
        "config": config,
        "results": results,
        "seed": seed,
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
