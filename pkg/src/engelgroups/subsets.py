"""Sorted element sets over a parent group, and subgroups."""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import GroupMismatch, NotASubgroup
from .groups import FiniteGroup, GroupElement


class ElementSubset:
    """Strictly increasing array of element indices of ``group``."""

    def __init__(self, group: FiniteGroup, members: Iterable[int] | np.ndarray):
        arr = np.unique(np.asarray(list(members) if not isinstance(members, np.ndarray)
                                   else members, dtype=np.intp))
        if arr.size and (arr[0] < 0 or arr[-1] >= group.order):
            raise IndexError("subset member outside the group")
        arr.setflags(write=False)
        self.group = group
        self.members = arr

    @classmethod
    def from_mask(cls, group: FiniteGroup, mask: np.ndarray):
        return cls(group, np.flatnonzero(mask))

    @classmethod
    def from_labels(cls, group: FiniteGroup, labels: Iterable[str]):
        return cls(group, [group.index_of(lab) for lab in labels])

    @classmethod
    def whole(cls, group: FiniteGroup):
        return cls(group, np.arange(group.order))

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.order, dtype=bool)
        m[self.members] = True
        return m

    @property
    def order(self) -> int:
        return int(self.members.size)

    def __len__(self) -> int:
        return int(self.members.size)

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in self.members)

    def __contains__(self, item) -> bool:
        if isinstance(item, GroupElement):
            if item.group is not self.group:
                return False
            item = item.index
        i = int(np.searchsorted(self.members, item))
        return i < self.members.size and self.members[i] == item

    def __eq__(self, other) -> bool:
        return (isinstance(other, ElementSubset) and other.group is self.group
                and np.array_equal(other.members, self.members))

    def __hash__(self) -> int:
        return hash((id(self.group), self.members.tobytes()))

    def __repr__(self) -> str:
        shown = ", ".join(self.labels()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"{type(self).__name__}({{{shown}{more}}}, order={len(self)})"

    def labels(self) -> list[str]:
        return [self.group.labels[i] for i in self.members]

    def elements(self) -> list[GroupElement]:
        return [GroupElement(self.group, int(i)) for i in self.members]

    def _check(self, other: "ElementSubset"):
        if other.group is not self.group:
            raise GroupMismatch("subsets of different groups")

    def issubset(self, other: "ElementSubset") -> bool:
        self._check(other)
        return bool(np.isin(self.members, other.members).all())

    def __le__(self, other: "ElementSubset") -> bool:
        return self.issubset(other)

    def __and__(self, other: "ElementSubset") -> "ElementSubset":
        self._check(other)
        return ElementSubset(self.group, np.intersect1d(self.members, other.members))

    def __sub__(self, other: "ElementSubset") -> "ElementSubset":
        self._check(other)
        return ElementSubset(self.group, np.setdiff1d(self.members, other.members))

    def subgroup_violation(self) -> str | None:
        """Why this set is not a subgroup, or ``None`` if it is."""
        g = self.group
        if 0 not in self:
            return "does not contain the identity"
        m = self.mask
        if not m[g.inverses[self.members]].all():
            return "not closed under inverses"
        prods = g.table[np.ix_(self.members, self.members)]
        bad = np.argwhere(~m[prods])
        if bad.size:
            a, b = self.members[bad[0]]
            return f"{g.labels[a]}*{g.labels[b]} lies outside"
        return None

    def is_subgroup(self) -> bool:
        return self.subgroup_violation() is None

    def to_subgroup(self) -> "Subgroup":
        return Subgroup(self.group, self.members)


class Subgroup(ElementSubset):
    """An element subset that contains 1 and is closed under products and inverses."""

    def __init__(self, group: FiniteGroup, members, *, trusted: bool = False):
        super().__init__(group, members)
        if not trusted:
            reason = self.subgroup_violation()
            if reason:
                raise NotASubgroup(f"subset of {group.name or 'group'} {reason}")

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "Subgroup":
        return cls(group, [0], trusted=True)

    @classmethod
    def whole(cls, group: FiniteGroup) -> "Subgroup":
        return cls(group, np.arange(group.order), trusted=True)


def as_subgroup(s: ElementSubset) -> Subgroup:
    return s if isinstance(s, Subgroup) else Subgroup(s.group, s.members)


def product_subset(product: FiniteGroup, left: ElementSubset, right: ElementSubset) -> ElementSubset:
    """``left x right`` inside the direct product, flat encoded."""
    g, h = product.factors
    if left.group is not g or right.group is not h:
        raise GroupMismatch("factor subsets do not match the product's factors")
    flat = (left.members[:, None] * h.order + right.members[None, :]).ravel()
    return ElementSubset(product, flat)
