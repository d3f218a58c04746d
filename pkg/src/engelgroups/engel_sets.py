"""Centralizer-like subsets, each computed straight from its defining condition.

None of these functions is written in terms of another: the equalities
between them are what the verification suites test, so every set gets its
own scan.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .groups import FiniteGroup, GroupElement, check_membership
from .structure import normal_closure
from .subsets import ElementSubset, Subgroup


def _resolve(g: FiniteGroup, e: GroupElement | str) -> int:
    if isinstance(e, str):
        return g.index_of(e)
    check_membership(g, e)
    return e.index


def _check_depth(n: int) -> None:
    if n < 1:
        raise ValueError("Engel depth must be at least 1")


def centralizer(g: FiniteGroup, e: GroupElement | str) -> Subgroup:
    """``{a : [a, e] = 1}``."""
    i = _resolve(g, e)
    single = np.zeros(g.order, dtype=np.bool_)
    single[i] = True
    return Subgroup(g, np.flatnonzero(kernels.centralizer_mask(g.table, g.inverses, single)),
                    trusted=True)


def right_engel_set_at(g: FiniteGroup, e: GroupElement | str, n: int) -> ElementSubset:
    """``{a : [a,_n e] = 1}``."""
    _check_depth(n)
    i = _resolve(g, e)
    return ElementSubset.from_mask(g, kernels.engel_mask(g.table, g.inverses, i, n))


def right_engel_set(g: FiniteGroup, n: int) -> ElementSubset:
    """``{a : [a,_n e] = 1 for every e}``."""
    _check_depth(n)
    return ElementSubset.from_mask(g, kernels.engel_universal_mask(g.table, g.inverses, n))


def left_e1(g: FiniteGroup, e: GroupElement | str) -> ElementSubset:
    """Left absorbers: ``{a : [a x, e] = [x, e] for every x}``."""
    i = _resolve(g, e)
    return ElementSubset.from_mask(g, kernels.left_absorb_mask(g.table, g.inverses, i))


def right_e1star(g: FiniteGroup, e: GroupElement | str) -> ElementSubset:
    """Right absorbers: ``{a : [x a, e] = [x, e] for every x}``."""
    i = _resolve(g, e)
    return ElementSubset.from_mask(g, kernels.right_absorb_mask(g.table, g.inverses, i))


def centralizer_of_normal_closure(g: FiniteGroup, e: GroupElement | str) -> Subgroup:
    """``{a : [a, m] = 1 for every m in the normal closure of e}``."""
    i = _resolve(g, e)
    closure = normal_closure(g, g.element(i))
    return Subgroup(g, np.flatnonzero(kernels.centralizer_mask(g.table, g.inverses, closure.mask)),
                    trusted=True)


def intersect_conjugate_r1(g: FiniteGroup, e: GroupElement | str) -> ElementSubset:
    """Intersection over every ``x`` of the 1-Engel set at ``e^x``."""
    i = _resolve(g, e)
    keep = np.ones(g.order, dtype=np.bool_)
    for x in range(g.order):
        keep &= kernels.engel_mask(g.table, g.inverses, int(g.conjugate(i, x)), 1)
    return ElementSubset.from_mask(g, keep)


SET_FUNCTIONS = {
    "r_n": right_engel_set_at,
    "e1star": right_e1star,
    "left_e1": left_e1,
    "centralizer": centralizer,
    "closure-centralizer": centralizer_of_normal_closure,
    "conj-intersection": intersect_conjugate_r1,
}
