"""JSON formats for set functions, set families and reports.

Set function::

    {"n": 3, "entries": [{"set": [1, 2], "value": 1.0}, {"set": [], "value": 0.0}]}

Omitted subsets are -inf; ``"-inf"`` is accepted as an explicit value.
Set family::

    {"n": 6, "members": [[1, 2, 3], [4, 5, 6]]}
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import NEG_INF, DCAError, GroundSet, SetFamily, SetFunction, elements_of, mask_of


class ParseError(DCAError, ValueError):
    pass


def encode_value(v: float):
    """Extended real -> JSON scalar."""
    v = float(v)
    if v == NEG_INF:
        return "-inf"
    return v


def decode_value(v) -> float:
    if isinstance(v, str):
        if v.strip().lower() in ("-inf", "-infinity"):
            return NEG_INF
        raise ParseError(f"unrecognised value {v!r}")
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"value must be a number or \"-inf\", got {v!r}")
    v = float(v)
    if math.isnan(v) or v == math.inf:
        raise ParseError(f"value {v} not allowed")
    return v


def _ground(doc) -> GroundSet:
    if not isinstance(doc, dict) or "n" not in doc:
        raise ParseError("document must be an object with an 'n' field")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}")
    return GroundSet(n)


def _mask(raw, n: int) -> int:
    if not isinstance(raw, list):
        raise ParseError(f"set must be a list of elements, got {raw!r}")
    try:
        return mask_of(raw, n)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def function_from_json(doc) -> SetFunction:
    ground = _ground(doc)
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise ParseError("'entries' must be a list")
    table = np.full(ground.size, NEG_INF)
    seen = set()
    for entry in entries:
        if not isinstance(entry, dict) or "set" not in entry or "value" not in entry:
            raise ParseError(f"bad entry {entry!r}")
        m = _mask(entry["set"], ground.n)
        if m in seen:
            raise ParseError(f"duplicate subset {sorted(entry['set'])}")
        seen.add(m)
        table[m] = decode_value(entry["value"])
    try:
        return SetFunction(ground, table)
    except DCAError as exc:
        raise ParseError(str(exc)) from exc


def function_to_json(f: SetFunction) -> dict:
    entries = [
        {"set": elements_of(m), "value": float(v)}
        for m, v in enumerate(f.table)
        if np.isfinite(v)
    ]
    return {"n": f.n, "entries": entries}


def family_from_json(doc) -> SetFamily:
    ground = _ground(doc)
    members = doc.get("members")
    if not isinstance(members, list):
        raise ParseError("'members' must be a list")
    masks = set()
    for raw in members:
        m = _mask(raw, ground.n)
        if m in masks:
            raise ParseError(f"duplicate member {sorted(raw)}")
        masks.add(m)
    if not masks:
        raise ParseError("family has no members")
    return SetFamily(ground, frozenset(masks))


def family_to_json(F: SetFamily) -> dict:
    return {"n": F.n, "members": F.as_sets()}


def dumps(doc) -> str:
    """Canonical JSON text (stable key order)."""
    return json.dumps(doc, sort_keys=True, allow_nan=False)


def _read(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def load_function(path) -> SetFunction:
    return function_from_json(_read(path))


def load_family(path) -> SetFamily:
    return family_from_json(_read(path))


def save_json(doc, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=1, allow_nan=False) + "\n")
