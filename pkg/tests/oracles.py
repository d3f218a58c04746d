"""Slow, table-free reference implementations used as test oracles.

Groups here are lists of hashable Python objects with a multiplication
function; every set is computed by literally transcribing its definition.
Nothing in this file imports engelgroups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable


@dataclass
class NaiveGroup:
    elements: list
    mul: Callable
    label: Callable[[Hashable], str]

    def __post_init__(self):
        self.identity = next(e for e in self.elements
                             if all(self.mul(e, x) == x for x in self.elements))
        self._inv = {x: next(y for y in self.elements if self.mul(x, y) == self.identity)
                     for x in self.elements}

    def inv(self, x):
        return self._inv[x]

    def prod(self, *xs):
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def comm(self, a, b):
        return self.prod(self.inv(a), self.inv(b), a, b)

    def conj(self, a, by):
        return self.prod(self.inv(by), a, by)

    def engel(self, x, g, n):
        for _ in range(n):
            x = self.comm(x, g)
        return x

    def by_label(self, label):
        return next(x for x in self.elements if self.label(x) == label)

    def labels(self, xs) -> set[str]:
        return {self.label(x) for x in xs}

    # set definitions

    def centralizer(self, g):
        return [a for a in self.elements if self.comm(a, g) == self.identity]

    def r_n(self, g, n):
        return [a for a in self.elements if self.engel(a, g, n) == self.identity]

    def r_n_all(self, n):
        return [a for a in self.elements
                if all(self.engel(a, g, n) == self.identity for g in self.elements)]

    def left_e1(self, g):
        return [a for a in self.elements
                if all(self.comm(self.mul(a, x), g) == self.comm(x, g) for x in self.elements)]

    def e1star(self, g):
        return [a for a in self.elements
                if all(self.comm(self.mul(x, a), g) == self.comm(x, g) for x in self.elements)]

    def generated(self, seeds):
        out = {self.identity} | set(seeds)
        while True:
            new = {self.mul(a, b) for a in out for b in out} | out
            if new == out:
                return out
            out = new

    def normal_closure(self, g):
        return self.generated({self.conj(g, x) for x in self.elements})

    def closure_centralizer(self, g):
        ncl = self.normal_closure(g)
        return [a for a in self.elements if all(self.comm(a, m) == self.identity for m in ncl)]

    def conj_intersection(self, g):
        return [a for a in self.elements
                if all(self.comm(a, self.conj(g, x)) == self.identity for x in self.elements)]

    def is_normal(self, s):
        s = set(s)
        return all(self.conj(x, g) in s for x in s for g in self.elements)

    def derived(self, s=None):
        s = self.elements if s is None else s
        return self.generated({self.comm(a, b) for a in s for b in s})

    def is_abelian(self, s=None):
        s = self.elements if s is None else s
        return all(self.mul(a, b) == self.mul(b, a) for a in s for b in s)

    def subgroups(self):
        """Every subgroup, by testing every subset closed under products (tiny groups only)."""
        rest = [x for x in self.elements if x != self.identity]
        out = []
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                s = {self.identity, *combo}
                if all(self.mul(a, b) in s for a in s for b in s):
                    out.append(frozenset(s))
        return out


# --------------------------------------------------------------------------
# concrete groups


def _cycle_label(p: tuple) -> str:
    n = len(p)
    seen, parts = set(), []
    for i in range(n):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "e"


def _compose(p, q):
    """Apply p first, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def symmetric(n: int) -> NaiveGroup:
    return NaiveGroup(list(itertools.permutations(range(n))), _compose, _cycle_label)


def alternating(n: int) -> NaiveGroup:
    def even(p):
        return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]) % 2 == 0
    return NaiveGroup([p for p in itertools.permutations(range(n)) if even(p)],
                      _compose, _cycle_label)


def cyclic(n: int) -> NaiveGroup:
    names = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    return NaiveGroup(list(range(n)), lambda a, b: (a + b) % n, lambda a: names[a])


def klein() -> NaiveGroup:
    names = {(0, 0): "e", (1, 0): "a", (0, 1): "b", (1, 1): "c"}
    return NaiveGroup(list(names), lambda x, y: (x[0] ^ y[0], x[1] ^ y[1]), names.get)


def dihedral(m: int) -> NaiveGroup:
    """Symmetries of a regular m-gon as permutations of its vertices."""
    r = tuple((i + 1) % m for i in range(m))
    s = tuple((-i) % m for i in range(m))
    ident = tuple(range(m))
    names = {}
    for j in range(2):
        for i in range(m):
            x = ident
            for _ in range(i):
                x = _compose(x, r)
            if j:
                x = _compose(x, s)
            rp = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
            names[x] = (rp + ("s" if j else "")) or "1"
    return NaiveGroup(list(names), _compose, names.get)


def quaternion() -> NaiveGroup:
    """Unit quaternions as integer 4-tuples (w, x, y, z)."""
    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)
    names = {}
    for k, unit in enumerate(["1", "i", "j", "k"]):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[k] = sign
            names[tuple(v)] = unit if sign > 0 else ("-1" if unit == "1" else "-" + unit)
    return NaiveGroup(list(names), qmul, names.get)


def product(g: NaiveGroup, h: NaiveGroup) -> NaiveGroup:
    return NaiveGroup([(a, b) for a in g.elements for b in h.elements],
                      lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
                      lambda x: f"({g.label(x[0])},{h.label(x[1])})")


def by_name(name: str) -> NaiveGroup:
    parts = name.split("x")
    if len(parts) > 1:
        out = by_name(parts[0])
        for p in parts[1:]:
            out = product(out, by_name(p))
        return out
    if name == "trivial":
        return NaiveGroup([0], lambda a, b: 0, lambda a: "e")
    if name == "K4":
        return klein()
    if name == "Q8":
        return quaternion()
    if name.startswith("D"):
        return dihedral(int(name[1:]) // 2)
    if name.startswith("S"):
        return symmetric(int(name[1:]))
    if name.startswith("A"):
        return alternating(int(name[1:]))
    if name.startswith("C"):
        return cyclic(int(name[1:]))
    raise KeyError(name)
