"""Finite groups, n-Engel words and centralizer-like subgroups, by brute force."""

__version__ = "0.1.0"

from .catalog import DEFAULT_CATALOG, catalog
from .engel_sets import (centralizer, centralizer_of_normal_closure, intersect_conjugate_r1,
                         left_e1, right_e1star, right_engel_set, right_engel_set_at)
from .errors import (GroupError, GroupMismatch, NotAGroup, NotASubgroup, NotNormal,
                     OrderCapExceeded, UnboundVariable, UnknownCatalogName, UnknownLabel,
                     WordSyntaxError)
from .groups import (FiniteGroup, GroupElement, Permutation, by_label, direct_product,
                     element_order, from_permutation_generators, from_table, inverse, multiply)
from .subsets import ElementSubset, Subgroup
from .words import engel_word, eval_word, format_word, parse_word

__all__ = [
    "DEFAULT_CATALOG", "catalog",
    "centralizer", "centralizer_of_normal_closure", "intersect_conjugate_r1", "left_e1",
    "right_e1star", "right_engel_set", "right_engel_set_at",
    "GroupError", "GroupMismatch", "NotAGroup", "NotASubgroup", "NotNormal", "OrderCapExceeded",
    "UnboundVariable", "UnknownCatalogName", "UnknownLabel", "WordSyntaxError",
    "FiniteGroup", "GroupElement", "Permutation", "by_label", "direct_product", "element_order",
    "from_permutation_generators", "from_table", "inverse", "multiply",
    "ElementSubset", "Subgroup",
    "engel_word", "eval_word", "format_word", "parse_word",
]
