"""Group description documents (JSON).

One object per group::

    {"name": "S3", "kind": "permutation", "degree": 3, "generators": ["(1 2)", "(1 2 3)"]}
    {"name": "C2", "kind": "table", "table": [[0, 1], [1, 0]], "labels": ["e", "t"]}
    {"name": "K4xS3", "kind": "product", "factors": [{...}, {...}]}
    {"name": "Q", "kind": "catalog", "catalog": "Q8"}

``name`` is optional everywhere; ``labels`` is optional for tables.  Unknown
fields are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path

from .catalog import catalog
from .errors import GroupError, GroupFileError
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, direct_product, from_permutation_generators,
                     from_table)

_FIELDS = {
    "table": {"table"},
    "permutation": {"degree", "generators"},
    "product": {"factors"},
    "catalog": {"catalog"},
}
_OPTIONAL = {"table": {"labels"}}


def group_from_document(doc: dict, cap: int = DEFAULT_ORDER_CAP, where: str = "$") -> FiniteGroup:
    if not isinstance(doc, dict):
        raise GroupFileError(f"{where}: expected an object")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise GroupFileError(f"{where}.kind: expected one of {sorted(_FIELDS)}, got {kind!r}")
    required = _FIELDS[kind]
    allowed = required | _OPTIONAL.get(kind, set()) | {"name", "kind"}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise GroupFileError(f"{where}.{unknown[0]}: unknown field for kind {kind!r}")
    missing = sorted(required - set(doc))
    if missing:
        raise GroupFileError(f"{where}.{missing[0]}: required for kind {kind!r}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise GroupFileError(f"{where}.name: expected a string")

    try:
        if kind == "table":
            group = from_table(doc["table"], doc.get("labels"), name=name, cap=cap)
        elif kind == "permutation":
            degree, gens = doc["degree"], doc["generators"]
            if not isinstance(degree, int) or degree < 1:
                raise GroupFileError(f"{where}.degree: expected a positive integer")
            if not isinstance(gens, list) or not all(isinstance(x, (str, list)) for x in gens):
                raise GroupFileError(f"{where}.generators: expected a list of cycle strings")
            group = from_permutation_generators(degree, gens, name=name, cap=cap)
        elif kind == "product":
            factors = doc["factors"]
            if not isinstance(factors, list) or len(factors) != 2:
                raise GroupFileError(f"{where}.factors: expected exactly two factor documents")
            left = group_from_document(factors[0], cap, f"{where}.factors[0]")
            right = group_from_document(factors[1], cap, f"{where}.factors[1]")
            group = direct_product(left, right, name=name, cap=cap)
        else:
            if not isinstance(doc["catalog"], str):
                raise GroupFileError(f"{where}.catalog: expected a string")
            group = catalog(doc["catalog"])
            if name and name != group.name:
                group = FiniteGroup(group.table, group.inverses, group.labels, name=name,
                                    factors=group.factors)
    except GroupFileError:
        raise
    except ValueError as exc:
        raise GroupFileError(f"{where}: {exc}") from None
    return group


def load_group_file(path: str | Path, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    group = group_from_document(doc, cap)
    if not group.name:
        group.name = path.stem
    return group


def resolve_group(descriptor: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """``catalog:NAME`` (``catalog:K4xS3`` for products) or a path to a group file."""
    descriptor = descriptor.strip()
    if descriptor.startswith("catalog:"):
        return catalog(descriptor[len("catalog:"):])
    path = Path(descriptor)
    if not path.exists():
        raise GroupError(f"group descriptor {descriptor!r} is neither catalog:NAME nor an existing file")
    return load_group_file(path, cap)
