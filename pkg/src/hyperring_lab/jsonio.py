"""JSON codecs for hyperrings, ideals, profiles, and class rings.

The interchange form stores the addition table as a matrix of element
indices and each multiplication cell as an ascending list of members, so a
file diff shows exactly which cells changed.  Decoding is strict: shape
errors, out-of-range entries, and duplicate members are rejected rather
than repaired.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .bitsets import mask_of, members
from .closedness import ClosedProfile
from .core import FiniteHyperring, MalformedTables
from .fundamental import FundamentalRing
from .ideals import classify_ideal

VOLATILE_KEYS = frozenset({"runtime_seconds", "total_runtime_seconds"})


def ring_to_dict(ring: FiniteHyperring) -> dict:
    return {
        "name": ring.name,
        "order": ring.order,
        "add": [list(row) for row in ring.add],
        "mul": [[members(cell) for cell in row] for row in ring.mul],
        "meta": dict(ring.meta),
    }


def _check_index(value: Any, order: int, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedTables("%s: expected an element index, got %r" % (where, value))
    if not 0 <= value < order:
        raise MalformedTables("%s: index %d out of range 0..%d" % (where, value, order - 1))
    return value


def ring_from_dict(data: dict) -> FiniteHyperring:
    if not isinstance(data, dict):
        raise MalformedTables("hyperring document must be an object")
    try:
        order = data["order"]
        add_rows = data["add"]
        mul_rows = data["mul"]
    except KeyError as missing:
        raise MalformedTables("missing key %s" % missing) from None
    if not isinstance(order, int) or order < 1:
        raise MalformedTables("order must be a positive integer")
    if len(add_rows) != order or len(mul_rows) != order:
        raise MalformedTables("tables must have exactly %d rows" % order)
    add = []
    for i, row in enumerate(add_rows):
        if len(row) != order:
            raise MalformedTables("add row %d has %d entries" % (i, len(row)))
        add.append([_check_index(v, order, "add[%d][%d]" % (i, j)) for j, v in enumerate(row)])
    mul = []
    for i, row in enumerate(mul_rows):
        if len(row) != order:
            raise MalformedTables("mul row %d has %d entries" % (i, len(row)))
        cells = []
        for j, cell in enumerate(row):
            where = "mul[%d][%d]" % (i, j)
            if not isinstance(cell, list):
                raise MalformedTables("%s: expected a list of members" % where)
            vals = [_check_index(v, order, where) for v in cell]
            if len(set(vals)) != len(vals):
                raise MalformedTables("%s: duplicate members %r" % (where, cell))
            cells.append(mask_of(vals))
        mul.append(cells)
    name = data.get("name")
    meta = data.get("meta") or {}
    if not isinstance(meta, dict):
        raise MalformedTables("meta must be an object")
    return FiniteHyperring.from_masks(add, mul, name=name, meta=meta)


def ideal_to_dict(ring: FiniteHyperring, imask: int) -> dict:
    return {
        "ring": ring.name,
        "members": members(imask),
        "class": classify_ideal(ring, imask),
    }


def profile_to_dict(profile: ClosedProfile) -> dict:
    return {
        "ideal": members(profile.ideal),
        "bound_L": profile.bound_L,
        "omega": list(profile.omega),
        "Omega": ["inf" if math.isinf(v) else int(v) for v in profile.Omega],
        "witnesses": {str(s): w for s, w in sorted(profile.witnesses.items())},
    }


def fundamental_to_dict(fr: FundamentalRing) -> dict:
    return {
        "classes": [members(c) for c in fr.classes],
        "add": [list(row) for row in fr.add],
        "mul": [list(row) for row in fr.mul],
    }


def _strip_volatile(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {
            k: _strip_volatile(v)
            for k, v in obj.items()
            if k not in VOLATILE_KEYS
        }
    if isinstance(obj, list):
        return [_strip_volatile(v) for v in obj]
    return obj


def canonical_json(obj: Any) -> str:
    """Stable compact encoding with timing fields removed; used for hashing."""
    return json.dumps(_strip_volatile(obj), sort_keys=True, separators=(",", ":"))


def read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path: str, obj: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
