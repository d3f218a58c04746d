"""Finite groups as dense Cayley tables.

Elements are plain indices ``0 .. order-1`` with the identity at 0.  A
:class:`GroupElement` pairs an index with its group so that mixing elements
of different groups is caught instead of silently producing garbage.

Permutations compose left to right: ``p * q`` applies ``p`` first, then
``q``, i.e. ``(p * q)(x) = q(p(x))``.  Under this convention
``(1 2) * (1 2 3) = (1 3)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import GroupMismatch, NotAGroup, OrderCapExceeded, UnknownLabel

DEFAULT_ORDER_CAP = 2048
FULL_ASSOCIATIVITY_LIMIT = 512
ASSOCIATIVITY_SAMPLES = 200_000

_LABEL_SPACE = re.compile(r"\s*([(),])\s*")


def normalize_label(label: str) -> str:
    """Canonical spelling: collapse whitespace, none around parentheses/commas."""
    label = " ".join(label.split())
    return _LABEL_SPACE.sub(r"\1", label)


# --------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{0, ..., degree-1}``; printed in 1-based cycle notation."""

    degree: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.degree or sorted(self.mapping) != list(range(self.degree)):
            raise ValueError(f"{self.mapping!r} is not a permutation of degree {self.degree}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(degree, tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: str | Sequence[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles, either ``"(1 2)(3 4)"`` or ``[[1, 2], [3, 4]]``."""
        if isinstance(cycles, str):
            text = cycles.strip()
            if text in ("", "e", "()", "1"):
                cycles = []
            else:
                if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
                    raise ValueError(f"bad cycle notation {text!r}")
                cycles = [[int(p) for p in re.split(r"[\s,]+", body.strip())]
                          for body in re.findall(r"\(([^)]*)\)", text)]
        mapping = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [p - 1 for p in cyc]
            for p in pts:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p + 1} outside 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p + 1} repeated in cycles")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                mapping[a] = b
        return cls(degree, tuple(mapping))

    def __call__(self, point: int) -> int:
        return self.mapping[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(self.degree, tuple(other.mapping[p] for p in self.mapping))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, p in enumerate(self.mapping):
            inv[p] = i
        return Permutation(self.degree, tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.mapping[start] == start:
                continue
            cyc = []
            p = start
            while not seen[p]:
                seen[p] = True
                cyc.append(p + 1)
                p = self.mapping[p]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


# --------------------------------------------------------------------------
# groups


class FiniteGroup:
    """Immutable finite group given by its Cayley table.

    ``table[i, j]`` is the index of ``i * j``.  ``factors`` is ``None`` for an
    atomic group and ``(left, right)`` for a direct product, in which case
    element ``(i, j)`` has flat index ``i * right.order + j``.
    """

    def __init__(
        self,
        table: np.ndarray,
        inverses: np.ndarray,
        labels: Sequence[str],
        name: str = "",
        factors: tuple["FiniteGroup", "FiniteGroup"] | None = None,
    ):
        self.table = np.ascontiguousarray(table, dtype=np.intp)
        self.inverses = np.ascontiguousarray(inverses, dtype=np.intp)
        self.table.setflags(write=False)
        self.inverses.setflags(write=False)
        self.labels = tuple(labels)
        self.name = name
        self.factors = factors
        self._by_label = {normalize_label(lab): i for i, lab in enumerate(self.labels)}
        if len(self._by_label) != len(self.labels):
            raise NotAGroup("element labels are not distinct")

    identity = 0
    permutations: tuple[Permutation, ...] | None = None

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def is_product(self) -> bool:
        return self.factors is not None

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator["GroupElement"]:
        return (GroupElement(self, i) for i in range(self.order))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def element(self, index: int) -> "GroupElement":
        if not 0 <= index < self.order:
            raise IndexError(f"element index {index} out of range for order {self.order}")
        return GroupElement(self, int(index))

    def by_label(self, label: str) -> "GroupElement":
        try:
            return GroupElement(self, self._by_label[normalize_label(label)])
        except KeyError:
            raise UnknownLabel(label, self.name) from None

    def index_of(self, label: str) -> int:
        return self.by_label(label).index

    def label(self, index: int) -> str:
        return self.labels[index]

    # product structure

    def decode(self, k: int) -> tuple[int, int]:
        if self.factors is None:
            raise GroupMismatch(f"{self.name or 'group'} is not a direct product")
        return divmod(int(k), self.factors[1].order)

    def encode(self, i: int, j: int) -> int:
        if self.factors is None:
            raise GroupMismatch(f"{self.name or 'group'} is not a direct product")
        return int(i) * self.factors[1].order + int(j)

    # raw index arithmetic, usable with ints or numpy index arrays

    def mul(self, a, b):
        return self.table[a, b]

    def inv(self, a):
        return self.inverses[a]

    def commutator(self, a, b):
        """``a^-1 b^-1 a b``."""
        t, iv = self.table, self.inverses
        return t[t[t[iv[a], iv[b]], a], b]

    def conjugate(self, a, by):
        """``by^-1 a by``."""
        t = self.table
        return t[t[self.inverses[by], a], by]

    def order_of(self, a: int) -> int:
        k, x = 1, int(a)
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k


class GroupElement:
    """An element index bound to its group."""

    __slots__ = ("group", "index")

    def __init__(self, group: FiniteGroup, index: int):
        if not 0 <= index < group.order:
            raise IndexError(f"element index {index} out of range for order {group.order}")
        self.group = group
        self.index = int(index)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupElement) and other.group is self.group
                and other.index == self.index)

    def __hash__(self) -> int:
        return hash((id(self.group), self.index))

    def __repr__(self) -> str:
        return f"<{self.label} in {self.group.name or 'group'}>"

    @property
    def label(self) -> str:
        return self.group.labels[self.index]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)


def _same_group(*elements: GroupElement) -> FiniteGroup:
    group = elements[0].group
    for e in elements[1:]:
        if e.group is not group:
            raise GroupMismatch()
    return group


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    group = _same_group(a, b)
    return GroupElement(group, int(group.table[a.index, b.index]))


def inverse(a: GroupElement) -> GroupElement:
    return GroupElement(a.group, int(a.group.inverses[a.index]))


def element_order(a: GroupElement) -> int:
    return a.group.order_of(a.index)


def by_label(group: FiniteGroup, label: str) -> GroupElement:
    return group.by_label(label)


def check_membership(group: FiniteGroup, *elements: GroupElement) -> None:
    for e in elements:
        if e.group is not group:
            raise GroupMismatch(f"{e!r} does not belong to {group.name or 'this group'}")


# --------------------------------------------------------------------------
# construction


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapExceeded(order, cap)


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        i, j, k = kernels.associativity_violation(table)
        if i >= 0:
            raise NotAGroup(f"({i}*{j})*{k} != {i}*({j}*{k})")
        return
    rng = np.random.default_rng(0)
    i, j, k = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    bad = np.flatnonzero(table[table[i, j], k] != table[i, table[j, k]])
    if bad.size:
        b = bad[0]
        raise NotAGroup(f"({i[b]}*{j[b]})*{k[b]} != {i[b]}*({j[b]}*{k[b]})")


def from_table(
    table,
    labels: Sequence[str] | None = None,
    name: str = "",
    cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Validate a multiplication table and return it as a group.

    The identity row is moved to index 0; other elements keep their relative
    order.  Default labels are the original indices as strings.
    """
    try:
        t = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotAGroup(f"table is not a rectangular integer array ({exc})") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup(f"table must be a non-empty square array, got shape {t.shape}")
    n = t.shape[0]
    _check_cap(n, cap)
    if labels is None:
        labels = [str(i) for i in range(n)]
    if len(labels) != n:
        raise NotAGroup(f"{len(labels)} labels for {n} elements")
    if t.min() < 0 or t.max() >= n:
        raise NotAGroup("closure: table entry outside 0..order-1")

    idx = np.arange(n)
    ident = [i for i in range(n) if (t[i] == idx).all() and (t[:, i] == idx).all()]
    if not ident:
        raise NotAGroup("no two-sided identity element")
    e = ident[0]

    order = [e] + [i for i in range(n) if i != e]
    pos = np.empty(n, dtype=np.int64)
    pos[order] = idx
    t = pos[t[np.ix_(order, order)]]
    labels = [labels[i] for i in order]

    is_id = t == 0
    if not (is_id.sum(axis=1) == 1).all():
        raise NotAGroup("some element has no inverse")
    inv = is_id.argmax(axis=1)
    if not (t[inv, idx] == 0).all():
        raise NotAGroup("left and right inverses differ")
    t = np.ascontiguousarray(t, dtype=np.intp)
    _check_associative(t)
    return FiniteGroup(t, inv, labels, name=name)


def from_permutation_generators(
    degree: int,
    generators: Sequence[Permutation | str],
    name: str = "",
    cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Close the generators under composition, breadth first.

    Element 0 is the identity; the rest appear in discovery order, applying
    generators in list order to each dequeued element.  Labels are cycle
    notation with ``e`` for the identity.
    """
    gens = [g if isinstance(g, Permutation) else Permutation.from_cycles(degree, g)
            for g in generators]
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = Permutation.identity(degree)
    index = {ident.mapping: 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = p * g
            if q.mapping not in index:
                index[q.mapping] = len(elems)
                elems.append(q)
                if len(elems) > cap:
                    raise OrderCapExceeded(len(elems), cap, "generated order")
                queue.append(q)

    n = len(elems)
    perms = np.array([p.mapping for p in elems], dtype=np.intp).reshape(n, degree)
    # composed[i, j, x] = perms[j][perms[i][x]]
    composed = perms[np.arange(n)[None, :, None], perms[:, None, :]]
    weights = degree ** np.arange(degree, dtype=np.int64)
    keys = perms.astype(np.int64) @ weights
    sorter = np.argsort(keys)
    flat = composed.reshape(-1, degree).astype(np.int64) @ weights
    table = sorter[np.searchsorted(keys, flat, sorter=sorter)].reshape(n, n)
    inv = np.array([index[p.inverse().mapping] for p in elems], dtype=np.intp)
    group = FiniteGroup(table, inv, [str(p) for p in elems], name=name)
    group.permutations = tuple(elems)
    return group


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str = "",
                   cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """``g x h`` with ``(i, j) -> i * |h| + j`` and componentwise products."""
    n, m = g.order, h.order
    _check_cap(n * m, cap)
    gt, ht = g.table, h.table
    # table[(i,j),(k,l)] = gt[i,k] * m + ht[j,l]
    table = (gt[:, None, :, None] * m + ht[None, :, None, :]).reshape(n * m, n * m)
    inv = (g.inverses[:, None] * m + h.inverses[None, :]).reshape(-1)
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    if not name and g.name and h.name:
        name = f"{g.name}x{h.name}"
    return FiniteGroup(table, inv, labels, name=name, factors=(g, h))


def validate(group: FiniteGroup) -> None:
    """Re-check every group axiom on an existing table; raises NotAGroup."""
    t = group.table
    n = group.order
    idx = np.arange(n)
    if t.min() < 0 or t.max() >= n:
        raise NotAGroup("closure: table entry outside 0..order-1")
    if not ((t[0] == idx).all() and (t[:, 0] == idx).all()):
        raise NotAGroup("index 0 is not the identity")
    iv = group.inverses
    if not ((t[idx, iv] == 0).all() and (t[iv, idx] == 0).all()):
        raise NotAGroup("inverse array is wrong")
    _check_associative(t)
