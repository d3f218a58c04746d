"""Subgroup machinery: generation, normality, quotients, derived series,
subgroup enumeration and subnormal chains."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import NotASubgroup, NotNormal, OrderCapExceeded
from .groups import FiniteGroup, GroupElement, check_membership, from_table
from .subsets import ElementSubset, Subgroup, as_subgroup

SUBGROUP_ENUMERATION_CAP = 200


def _mask_of(group: FiniteGroup, indices) -> np.ndarray:
    m = np.zeros(group.order, dtype=np.bool_)
    m[np.asarray(indices, dtype=np.intp)] = True
    return m


def generated_subgroup(g: FiniteGroup, seeds) -> Subgroup:
    """Smallest subgroup containing ``seeds`` (GroupElements or raw indices)."""
    idx = []
    for s in seeds:
        if isinstance(s, GroupElement):
            check_membership(g, s)
            idx.append(s.index)
        else:
            idx.append(int(s))
    mask = kernels.closure_mask(g.table, _mask_of(g, idx) if idx else _mask_of(g, [0]))
    return Subgroup(g, np.flatnonzero(mask), trusted=True)


def _require_subgroup(s: ElementSubset) -> Subgroup:
    if not isinstance(s, ElementSubset):
        raise NotASubgroup(f"expected a subgroup, got {type(s).__name__}")
    return as_subgroup(s)


def normality_witness(g: FiniteGroup, s: ElementSubset, t: ElementSubset | None = None):
    """``(conjugator, element)`` showing ``s`` is not normal in ``t``, or ``None``."""
    s = _require_subgroup(s)
    conj_mask = np.ones(g.order, dtype=np.bool_) if t is None else _require_subgroup(t).mask
    if t is not None and not s.issubset(t):
        raise NotASubgroup("first subgroup is not contained in the second")
    x, y = kernels.conjugation_witness(g.table, g.inverses, s.mask, conj_mask)
    return None if x < 0 else (x, y)


def is_normal(g: FiniteGroup, s: ElementSubset) -> bool:
    return normality_witness(g, s) is None


def is_normal_in(g: FiniteGroup, s: ElementSubset, t: ElementSubset) -> bool:
    return normality_witness(g, s, t) is None


def conjugacy_class(g: FiniteGroup, e: GroupElement) -> ElementSubset:
    check_membership(g, e)
    xs = np.arange(g.order)
    return ElementSubset(g, g.conjugate(e.index, xs))


def normal_closure(g: FiniteGroup, e: GroupElement) -> Subgroup:
    """Subgroup generated by every conjugate ``x^-1 e x``."""
    check_membership(g, e)
    conj = g.conjugate(e.index, np.arange(g.order))
    closure = Subgroup(g, np.flatnonzero(kernels.closure_mask(g.table, _mask_of(g, conj))),
                       trusted=True)
    if not is_normal(g, closure):
        raise AssertionError("normal closure is not normal")
    return closure


# --------------------------------------------------------------------------
# quotients


@dataclass
class QuotientGroup:
    """``ambient / kernel`` as cosets of ``kernel`` inside ``ambient``.

    Cosets are ordered by least member; each coset's representative is its
    least member, so coset 0 is the kernel itself.  ``group`` is the quotient
    as a :class:`FiniteGroup` whose labels are the representatives' labels.
    """

    parent: FiniteGroup
    kernel: Subgroup
    ambient: Subgroup
    cosets: list[ElementSubset]
    representatives: np.ndarray
    coset_of: np.ndarray
    table: np.ndarray
    group: FiniteGroup = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.cosets)

    def coset_index(self, e: GroupElement | int) -> int:
        idx = e.index if isinstance(e, GroupElement) else int(e)
        c = int(self.coset_of[idx])
        if c < 0:
            raise ValueError("element lies outside the ambient subgroup")
        return c

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def commutator(self, a: GroupElement | int, b: GroupElement | int) -> int:
        """Coset index of ``[aK, bK]``."""
        return int(self.group.commutator(self.coset_index(a), self.coset_index(b)))


def quotient(g: FiniteGroup, k: ElementSubset, ambient: ElementSubset | None = None) -> QuotientGroup:
    """Quotient of ``ambient`` (default: all of ``g``) by the normal subgroup ``k``."""
    k = _require_subgroup(k)
    amb = Subgroup.whole(g) if ambient is None else _require_subgroup(ambient)
    if normality_witness(g, k, amb) is not None:
        raise NotNormal("kernel is not normal in the ambient group")
    coset_of = np.full(g.order, -1, dtype=np.intp)
    cosets, reps = [], []
    for a in amb.members:
        if coset_of[a] >= 0:
            continue
        members = g.table[a, k.members]
        coset_of[members] = len(cosets)
        cosets.append(ElementSubset(g, members))
        reps.append(int(a))
    reps_arr = np.array(reps, dtype=np.intp)
    table = coset_of[g.table[np.ix_(reps_arr, reps_arr)]]
    qgroup = from_table(table, [g.labels[r] for r in reps],
                        name=f"{g.name or 'G'}/N")
    return QuotientGroup(g, k, amb, cosets, reps_arr, coset_of, np.asarray(table), qgroup)


# --------------------------------------------------------------------------
# derived series and predicates


def _commutator_subgroup(g: FiniteGroup, s: ElementSubset) -> Subgroup:
    m = s.members
    comms = g.commutator(m[:, None], m[None, :]).ravel()
    return Subgroup(g, np.flatnonzero(kernels.closure_mask(g.table, _mask_of(g, comms))),
                    trusted=True)


def derived_subgroup(g: FiniteGroup) -> Subgroup:
    return _commutator_subgroup(g, Subgroup.whole(g))


def derived_series(g: FiniteGroup) -> list[Subgroup]:
    """``[G, G', G'', ...]`` up to and including the first repeated term's predecessor."""
    series = [Subgroup.whole(g)]
    while True:
        nxt = _commutator_subgroup(g, series[-1])
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def subset_is_abelian(s: ElementSubset) -> bool:
    t = s.group.table[np.ix_(s.members, s.members)]
    return bool((t == t.T).all())


def is_abelian(g: FiniteGroup) -> bool:
    return bool((g.table == g.table.T).all())


def is_solvable(g: FiniteGroup) -> bool:
    return len(derived_series(g)[-1]) == 1


def is_metabelian(g: FiniteGroup) -> bool:
    """Derived subgroup abelian, i.e. second derived subgroup trivial."""
    return subset_is_abelian(derived_subgroup(g))


def center(g: FiniteGroup) -> Subgroup:
    mask = (g.table == g.table.T).all(axis=1)
    return Subgroup(g, np.flatnonzero(mask), trusted=True)


# --------------------------------------------------------------------------
# subgroup enumeration


def _sort_key(s: Subgroup):
    return (len(s), tuple(int(i) for i in s.members))


def enumerate_subgroups(g: FiniteGroup, cap: int = SUBGROUP_ENUMERATION_CAP) -> list[Subgroup]:
    """All subgroups, by joining cyclic subgroups pairwise until nothing new appears."""
    if g.order > cap:
        raise OrderCapExceeded(g.order, cap, "subgroup enumeration order")
    found: dict[bytes, np.ndarray] = {}
    for x in range(g.order):
        m = kernels.closure_mask(g.table, _mask_of(g, [x]))
        found.setdefault(m.tobytes(), m)
    frontier = list(found.values())
    while frontier:
        known = list(found.values())
        fresh = []
        for a in frontier:
            for b in known:
                if (a <= b).all() or (b <= a).all():
                    continue
                j = kernels.closure_mask(g.table, a | b)
                key = j.tobytes()
                if key not in found:
                    found[key] = j
                    fresh.append(j)
        frontier = fresh
    subs = [Subgroup(g, np.flatnonzero(m), trusted=True) for m in found.values()]
    return sorted(subs, key=_sort_key)


def enumerate_normal_subgroups(g: FiniteGroup, cap: int = SUBGROUP_ENUMERATION_CAP) -> list[Subgroup]:
    return [s for s in enumerate_subgroups(g, cap) if is_normal(g, s)]


# --------------------------------------------------------------------------
# subnormal chains


@dataclass
class SubnormalChain:
    """Ascending subgroups from the trivial subgroup to the whole group."""

    links: list[Subgroup]

    def __post_init__(self):
        if len(self.links) < 2:
            raise ValueError("a chain needs at least two links")
        self.links = [_require_subgroup(s) for s in self.links]
        g = self.links[0].group
        if len(self.links[0]) != 1:
            raise ValueError("first link must be the trivial subgroup")
        if len(self.links[-1]) != g.order:
            raise ValueError("last link must be the whole group")
        for lo, hi in zip(self.links, self.links[1:]):
            if not lo.issubset(hi):
                raise ValueError("chain links are not ascending")


@dataclass
class ChainStep:
    lower_order: int
    upper_order: int
    normal: bool
    quotient_order: int
    quotient_abelian: bool | None
    witness: dict | None = None


@dataclass
class ChainReport:
    steps: list[ChainStep]

    @property
    def verdict(self) -> bool:
        return all(s.normal and s.quotient_abelian for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "links": [self.steps[0].lower_order] + [s.upper_order for s in self.steps],
            "steps": [
                {"lower_order": s.lower_order, "upper_order": s.upper_order,
                 "normal": s.normal, "quotient_order": s.quotient_order,
                 "quotient_abelian": s.quotient_abelian, "witness": s.witness}
                for s in self.steps
            ],
        }


def verify_chain(g: FiniteGroup, chain: SubnormalChain | list) -> ChainReport:
    """Check each link is normal in the next and the successive quotients are abelian."""
    if not isinstance(chain, SubnormalChain):
        chain = SubnormalChain(list(chain))
    steps = []
    for lo, hi in zip(chain.links, chain.links[1:]):
        wit = normality_witness(g, lo, hi)
        if wit is not None:
            x, y = wit
            steps.append(ChainStep(len(lo), len(hi), False, len(hi) // len(lo), None,
                                   {"conjugator": g.labels[x], "element": g.labels[y]}))
            continue
        q = quotient(g, lo, hi)
        witness = None
        abelian = q.is_abelian()
        if not abelian:
            i, j = np.argwhere(q.table != q.table.T)[0]
            witness = {"cosets": [g.labels[q.representatives[i]], g.labels[q.representatives[j]]]}
        steps.append(ChainStep(len(lo), len(hi), True, q.order, abelian, witness))
    return ChainReport(steps)
