"""Named small groups.

Label conventions
-----------------
``trivial``   ``e``
``Cn``        ``e, g, g^2, ..., g^(n-1)``
``K4``        ``e, a, b, c`` with ``ab = c``
``D8, D12``   ``1, r, ..., r^(m-1), s, rs, ..., r^(m-1)s``; element ``r^i s^j``
              has index ``i + m j`` and ``r s r = s``
``Q8``        ``1, -1, i, -i, j, -j, k, -k``
``S3, S4, A4, A5``  cycle notation on points 1..n, identity ``e``

Products are spelled with ``x``: ``K4xS3`` is ``K4 x S3`` and longer chains
associate to the left.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import UnknownCatalogName
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, direct_product, from_permutation_generators,
                     from_table)

_PERMUTATION_GROUPS = {
    "S3": (3, ["(1 2)", "(1 2 3)"]),
    "S4": (4, ["(1 2)", "(1 2 3 4)"]),
    "A4": (4, ["(1 2 3)", "(1 2)(3 4)"]),
    "A5": (5, ["(1 2 3)", "(1 2 3 4 5)"]),
}

CATALOG_NAMES = (["trivial"] + [f"C{n}" for n in range(1, 17)]
                 + ["K4", "D8", "D12", "Q8", "S3", "S4", "A4", "A5"])

DEFAULT_CATALOG = ("C2", "C3", "C4", "K4", "S3", "D8", "Q8", "A4")


def cyclic(n: int, name: str | None = None) -> FiniteGroup:
    idx = np.arange(n)
    labels = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    return from_table((idx[:, None] + idx[None, :]) % n, labels[:n], name=name or f"C{n}")


def klein_four() -> FiniteGroup:
    idx = np.arange(4)
    return from_table(idx[:, None] ^ idx[None, :], ["e", "a", "b", "c"], name="K4")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order, ``<r, s | r^m = s^2 = 1, rsr = s>``."""
    m = order // 2
    table = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        i, j = x % m, x // m
        for y in range(order):
            k, l = y % m, y // m
            # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
            table[x, y] = (i + (k if j == 0 else -k)) % m + m * ((j + l) % 2)
    rot = ["1", "r"] + [f"r^{i}" for i in range(2, m)]
    refl = ["s", "rs"] + [f"r^{i}s" for i in range(2, m)]
    return from_table(table, (rot + refl)[:order] if m > 1 else ["1", "s"], name=f"D{order}")


def quaternion() -> FiniteGroup:
    # unit k in {1,i,j,k} with sign; element index = 2*unit + (sign < 0)
    units = {(0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
             (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
             (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
             (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1)}
    table = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            u, sign = units[(x // 2, y // 2)]
            if (x % 2) ^ (y % 2):
                sign = -sign
            table[x, y] = 2 * u + (sign < 0)
    return from_table(table, ["1", "-1", "i", "-i", "j", "-j", "k", "-k"], name="Q8")


def _atomic(name: str) -> FiniteGroup:
    if name == "trivial":
        return from_table([[0]], ["e"], name="trivial")
    if name == "K4":
        return klein_four()
    if name in ("D8", "D12"):
        return dihedral(int(name[1:]))
    if name == "Q8":
        return quaternion()
    if name in _PERMUTATION_GROUPS:
        degree, gens = _PERMUTATION_GROUPS[name]
        return from_permutation_generators(degree, gens, name=name)
    if name.startswith("C") and name[1:].isdigit() and 1 <= int(name[1:]) <= 16:
        return cyclic(int(name[1:]))
    raise UnknownCatalogName(name)


@functools.lru_cache(maxsize=None)
def catalog(name: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Look up a named group, or a product of names joined by ``x``."""
    name = name.strip()
    parts = name.split("x")
    if len(parts) == 1:
        return _atomic(name)
    if any(not p for p in parts):
        raise UnknownCatalogName(name)
    group = _atomic(parts[0])
    for p in parts[1:]:
        group = direct_product(group, _atomic(p), cap=cap)
    return group
