"""Executable checks of the centralizer-like subgroup results.

Every equality is checked by computing each side with its own definitional
scan from :mod:`engelgroups.engel_sets`; no side is derived from another.
Claims that are theorems should hold everywhere (a failure is a bug and the
report names the side that disagreed); the conjecture and the fourth part
of the single-group proposition are explorations that may fail.

Claim ids
---------
``Prop1.1``  left absorbers = 1-Engel set = centralizer
``Prop1.2``  right absorbers = intersection over conjugates = centralizer of normal closure
``Prop1.3``  right absorbers normal, and contained in the left absorbers
``Prop1.4``  right absorbers = 1-Engel set (not true in general)
``Prop3``    words evaluate componentwise in a direct product
``Thm4.1``   universal n-Engel set of G x H = product of the factors' sets
``Thm4.2``   same, at a fixed element (g, h)
``Thm5.1``   ``Prop1.1`` in G x H
``Thm5.2``   ``Prop1.2`` in G x H
``Conj6.1``  right absorbers = 1-Engel set in G x H
``Conj6.2``  ``Prop1.3`` in G x H
``Absorption`` / ``Expansion``  two commutator identities, checked exhaustively
"""

from __future__ import annotations

import functools
import itertools
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .engel_sets import (centralizer, centralizer_of_normal_closure, intersect_conjugate_r1,
                         left_e1, right_e1star, right_engel_set, right_engel_set_at)
from .errors import GroupError, OrderCapExceeded
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, direct_product
from .structure import (center, derived_series, enumerate_normal_subgroups, is_abelian,
                        is_metabelian, is_solvable, normality_witness, quotient,
                        SUBGROUP_ENUMERATION_CAP)
from .subsets import ElementSubset, product_subset
from .words import eval_indices, parse_word, variables

SINGLE_GROUP_CLAIMS = ("Prop1.1", "Prop1.2", "Prop1.3", "Prop1.4", "Absorption", "Expansion")
PRODUCT_CLAIMS = ("Prop3", "Thm4.1", "Thm4.2", "Thm5.1", "Thm5.2", "Conj6.1", "Conj6.2")
ALL_CLAIMS = SINGLE_GROUP_CLAIMS + PRODUCT_CLAIMS

CLAIM_GROUPS = {
    "prop1": ("Prop1.1", "Prop1.2", "Prop1.3", "Prop1.4"),
    "thm4": ("Thm4.1", "Thm4.2"),
    "thm5": ("Thm5.1", "Thm5.2"),
    "conj6": ("Conj6.1", "Conj6.2"),
}

PRODUCT_ORDER_CAP = 200
DEFAULT_ENGEL_DEPTH = 4

COMPONENTWISE_WORDS = (
    "[x, y]",
    "[x,_2 y]",
    "[x,_4 y]",
    "x*y^-1*z",
    "[x*y, z]",
    "x^y*[y, z]^-1",
    "[[x, y],_2 z^x]",
    "(x*y)^-1^z",
)


def resolve_claims(claim: str) -> tuple[str, ...]:
    """Map a user spelling (``thm4``, ``Conj6.1``, ``prop1``) to claim ids."""
    key = claim.strip().lower()
    if key in CLAIM_GROUPS:
        return CLAIM_GROUPS[key]
    for c in ALL_CLAIMS:
        if c.lower() == key:
            return (c,)
    raise GroupError(f"unknown claim {claim!r}; expected one of "
                     f"{', '.join(list(CLAIM_GROUPS) + [c.lower() for c in ALL_CLAIMS])}")


@dataclass
class CheckSpec:
    claim: str
    groups: list[str]
    engel_depth_max: int = DEFAULT_ENGEL_DEPTH

    def __post_init__(self):
        if self.engel_depth_max < 1:
            raise ValueError("engel_depth_max must be at least 1")
        self.claims = resolve_claims(self.claim)


# --------------------------------------------------------------------------
# reports


@dataclass
class InstanceRecord:
    groups: list[str]
    element: str | None
    params: dict
    verdict: bool
    witnesses: dict
    flags: dict
    key: tuple = field(default=(), repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "groups": list(self.groups),
            "element": self.element,
            "params": self.params,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "flags": self.flags,
        }


@dataclass
class VerificationReport:
    claim: str
    instances: list[InstanceRecord] = field(default_factory=list)
    skipped: list[dict] | None = None
    minimal_counterexample: dict | None = None
    wall_time: float = 0.0

    def sort(self) -> "VerificationReport":
        self.instances.sort(key=lambda r: r.key)
        return self

    @property
    def failures(self) -> list[InstanceRecord]:
        return [r for r in self.instances if not r.verdict]

    @property
    def held(self) -> bool:
        return all(r.verdict for r in self.instances)

    def summary(self) -> dict:
        held = sum(1 for r in self.instances if r.verdict)
        return {"checked": len(self.instances), "held": held, "failed": len(self.instances) - held}

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "instances": [r.to_dict() for r in self.instances],
            "summary": self.summary(),
            "tool_version": __version__,
        }
        if self.skipped is not None:
            out["skipped"] = self.skipped
        if self.minimal_counterexample is not None or self.skipped is not None:
            out["minimal_counterexample"] = self.minimal_counterexample
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False)

    def to_text(self, failures_only: bool = False) -> str:
        lines = [f"claim: {self.claim}"]
        for r in self.instances:
            if failures_only and r.verdict:
                continue
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            where = " x ".join(r.groups)
            elem = f" at {r.element}" if r.element is not None else ""
            lines.append(f"  [{'held' if r.verdict else 'FAILED'}] {where}{elem} {params}".rstrip())
            if not r.verdict:
                for k, v in r.witnesses.items():
                    lines.append(f"      {k}: {_render(v)}")
        if self.skipped:
            for s in self.skipped:
                lines.append(f"  [skipped] {' x '.join(s['groups'])}: {s['reason']}")
        if self.minimal_counterexample:
            m = self.minimal_counterexample
            lines.append(f"minimal counterexample: {' x '.join(m['groups'])} at {m['element']}")
        s = self.summary()
        lines.append(f"summary: checked={s['checked']} held={s['held']} failed={s['failed']}")
        return "\n".join(lines)


def _render(v) -> str:
    if isinstance(v, list):
        return "{" + ", ".join(map(str, v)) + "}"
    return str(v)


def merge_reports(claim: str, reports: list[VerificationReport]) -> VerificationReport:
    out = VerificationReport(claim)
    for r in reports:
        out.instances.extend(r.instances)
        out.wall_time += r.wall_time
    return out


@functools.lru_cache(maxsize=256)
def group_flags(group: FiniteGroup) -> dict:
    return {"solvable": is_solvable(group), "metabelian": is_metabelian(group)}


def _compare(sides: dict[str, ElementSubset]) -> tuple[bool, dict]:
    """All sides equal?  On failure, name the first disagreeing pair and list every side."""
    names = list(sides)
    base = sides[names[0]]
    for other in names[1:]:
        if sides[other] != base:
            wit = {name: s.labels() for name, s in sides.items()}
            wit["disagreement"] = f"{names[0]} != {other}"
            wit[f"only_in_{names[0]}"] = (base - sides[other]).labels()
            wit[f"only_in_{other}"] = (sides[other] - base).labels()
            return False, wit
    return True, {}


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapExceeded(order, cap, "product order")


def _want(parts, claim: str) -> bool:
    return parts is None or claim in parts


# --------------------------------------------------------------------------
# single-group checks


_ABSORBER_CLAIMS = {
    # prefix: (left chain, right chain, normal + contained, right absorbers = 1-Engel set)
    "Prop1": ("Prop1.1", "Prop1.2", "Prop1.3", "Prop1.4"),
    "Thm5": ("Thm5.1", "Thm5.2", None, None),
    "Conj6": (None, None, "Conj6.2", "Conj6.1"),
}


def _absorber_checks(group: FiniteGroup, names: list[str], parts, key0: tuple,
                     prefix: str) -> list[InstanceRecord]:
    """Prop1/Thm5/Conj6 style checks at every element of ``group``."""
    flags = group_flags(group)
    chain1, chain2, normal_claim, equal_claim = _ABSORBER_CLAIMS[prefix]
    scans = {
        "left_e1": left_e1,
        "r_1": lambda grp, e: right_engel_set_at(grp, e, 1),
        "centralizer": centralizer,
        "e1star": right_e1star,
        "conj_intersection": intersect_conjugate_r1,
        "closure_centralizer": centralizer_of_normal_closure,
    }
    records = []
    for e in range(group.order):
        label = group.labels[e]
        cache: dict[str, ElementSubset] = {}

        def get(which):
            if which not in cache:
                cache[which] = scans[which](group, group.element(e))
            return cache[which]

        def record(claim, verdict, wit):
            records.append(InstanceRecord(names, label, {"claim": claim}, verdict, wit, flags,
                                          key=key0 + (e, claim)))

        if chain1 and _want(parts, chain1):
            record(chain1, *_compare({k: get(k) for k in ("left_e1", "r_1", "centralizer")}))
        if chain2 and _want(parts, chain2):
            record(chain2, *_compare({k: get(k) for k in ("e1star", "conj_intersection",
                                                          "closure_centralizer")}))
        if equal_claim and _want(parts, equal_claim):
            record(equal_claim, *_compare({"e1star": get("e1star"), "r_1": get("r_1")}))
        if normal_claim and _want(parts, normal_claim):
            record(normal_claim, *_normal_and_contained(group, get("e1star"), get("left_e1")))
    return records


def _normal_and_contained(group, e1star: ElementSubset, left: ElementSubset) -> tuple[bool, dict]:
    wit = {}
    reason = e1star.subgroup_violation()
    if reason:
        return False, {"e1star": e1star.labels(), "not_a_subgroup": reason}
    bad = normality_witness(group, e1star)
    if bad is not None:
        wit["conjugator"] = group.labels[bad[0]]
        wit["element"] = group.labels[bad[1]]
        wit["conjugate"] = group.labels[int(group.conjugate(bad[1], bad[0]))]
    if not e1star.issubset(left):
        wit["not_in_left_e1"] = (e1star - left).labels()
    if wit:
        wit["e1star"] = e1star.labels()
        wit["normal"] = bad is None
        wit["contained"] = "not_in_left_e1" not in wit
    return not wit, wit


def check_prop1(g: FiniteGroup, parts=None, cap: int = DEFAULT_ORDER_CAP) -> VerificationReport:
    """Parts 1-3 should hold at every element; part 4 is reported per element."""
    _check_cap(g.order, cap)
    t0 = time.perf_counter()
    parts = None if parts is None else set(parts)
    report = VerificationReport("Prop1")
    report.instances = _absorber_checks(g, [g.name], parts, (0,), "Prop1")
    report.wall_time = time.perf_counter() - t0
    return report.sort()


def _exhaustive_bindings(order: int, names: list[str]) -> dict[str, np.ndarray]:
    grids = np.meshgrid(*[np.arange(order)] * len(names), indexing="ij")
    return {n: grid.ravel() for n, grid in zip(names, grids)}


def check_absorption_identity(g: FiniteGroup) -> VerificationReport:
    """``[x a, u] = a^-1 [x, u] a`` whenever ``[a, u] = 1``, over every triple."""
    t0 = time.perf_counter()
    env = _exhaustive_bindings(g.order, ["x", "a", "u"])
    lhs = eval_indices(parse_word("[x*a, u]"), g, env)
    rhs = eval_indices(parse_word("[x, u]^a"), g, env)
    applicable = eval_indices(parse_word("[a, u]"), g, env) == 0
    bad = np.flatnonzero(applicable & (lhs != rhs))
    report = VerificationReport("Absorption")
    wit = {}
    if bad.size:
        i = bad[0]
        wit = {v: g.labels[env[v][i]] for v in ("x", "a", "u")}
    report.instances.append(InstanceRecord(
        [g.name], None, {"claim": "Absorption", "cases": int(applicable.sum())},
        not bad.size, wit, group_flags(g), key=(0,)))
    report.wall_time = time.perf_counter() - t0
    return report


def check_expansion_identity(g: FiniteGroup) -> VerificationReport:
    """``[x a^g, u] = (a^-1)^g (u^-1)^x a^g u`` over every quadruple."""
    t0 = time.perf_counter()
    env = _exhaustive_bindings(g.order, ["x", "a", "g", "u"])
    lhs = eval_indices(parse_word("[x*(a^g), u]"), g, env)
    a, gg, x, u = env["a"], env["g"], env["x"], env["u"]
    # right side assembled from table lookups, independent of the word evaluator
    t, iv = g.table, g.inverses
    a_g = t[t[iv[gg], a], gg]
    ainv_g = t[t[iv[gg], iv[a]], gg]
    uinv_x = t[t[iv[x], iv[u]], x]
    rhs = t[t[t[ainv_g, uinv_x], a_g], u]
    bad = np.flatnonzero(lhs != rhs)
    report = VerificationReport("Expansion")
    wit = {}
    if bad.size:
        i = bad[0]
        wit = {v: g.labels[env[v][i]] for v in ("x", "a", "g", "u")}
    report.instances.append(InstanceRecord(
        [g.name], None, {"claim": "Expansion", "cases": int(lhs.size)},
        not bad.size, wit, group_flags(g), key=(0,)))
    report.wall_time = time.perf_counter() - t0
    return report


# --------------------------------------------------------------------------
# direct-product checks


def _product(g: FiniteGroup, h: FiniteGroup, cap: int) -> FiniteGroup:
    _check_cap(g.order * h.order, cap)
    return direct_product(g, h)


def check_theorem4(g: FiniteGroup, h: FiniteGroup, n_max: int = DEFAULT_ENGEL_DEPTH,
                   parts=None, cap: int = PRODUCT_ORDER_CAP, key0: tuple = ()) -> VerificationReport:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    t0 = time.perf_counter()
    p = _product(g, h, cap)
    names = [g.name, h.name]
    flags = group_flags(p)
    report = VerificationReport("Thm4")
    for n in range(1, n_max + 1):
        if _want(parts, "Thm4.1"):
            ok, wit = _compare({
                "product_side": right_engel_set(p, n),
                "factor_side": product_subset(p, right_engel_set(g, n), right_engel_set(h, n)),
            })
            report.instances.append(InstanceRecord(names, None, {"claim": "Thm4.1", "n": n},
                                                   ok, wit, flags, key=key0 + (-1, 0, n)))
        if _want(parts, "Thm4.2"):
            left_sets = [right_engel_set_at(g, g.element(u), n) for u in range(g.order)]
            right_sets = [right_engel_set_at(h, h.element(v), n) for v in range(h.order)]
            for k in range(p.order):
                u, v = p.decode(k)
                ok, wit = _compare({
                    "product_side": right_engel_set_at(p, p.element(k), n),
                    "factor_side": product_subset(p, left_sets[u], right_sets[v]),
                })
                report.instances.append(InstanceRecord(
                    names, p.labels[k], {"claim": "Thm4.2", "n": n}, ok, wit, flags,
                    key=key0 + (k, 1, n)))
    report.wall_time = time.perf_counter() - t0
    return report.sort()


def check_theorem5(g: FiniteGroup, h: FiniteGroup, parts=None, cap: int = PRODUCT_ORDER_CAP,
                   key0: tuple = ()) -> VerificationReport:
    t0 = time.perf_counter()
    p = _product(g, h, cap)
    wanted = {"Thm5.1", "Thm5.2"} if parts is None else set(parts)
    report = VerificationReport("Thm5")
    report.instances = _absorber_checks(p, [g.name, h.name], wanted, key0, "Thm5")
    report.wall_time = time.perf_counter() - t0
    return report.sort()


def check_conjecture6(g: FiniteGroup, h: FiniteGroup, parts=None, cap: int = PRODUCT_ORDER_CAP,
                      key0: tuple = ()) -> VerificationReport:
    """Per element: equality with the 1-Engel set (6.1); normality and containment (6.2)."""
    t0 = time.perf_counter()
    p = _product(g, h, cap)
    wanted = {"Conj6.1", "Conj6.2"} if parts is None else set(parts)
    report = VerificationReport("Conj6")
    report.instances = _absorber_checks(p, [g.name, h.name], wanted, key0, "Conj6")
    report.wall_time = time.perf_counter() - t0
    return report.sort()


def check_prop3(g: FiniteGroup, h: FiniteGroup, words=COMPONENTWISE_WORDS,
                exhaustive_limit: int = 64, samples: int = 10_000, seed: int = 0,
                cap: int = PRODUCT_ORDER_CAP, key0: tuple = ()) -> VerificationReport:
    """Evaluate each word in G x H and in both factors; the results must pair up.

    Every binding is tried when ``|G x H| <= exhaustive_limit``; otherwise
    ``samples`` random bindings from a seeded generator.
    """
    t0 = time.perf_counter()
    p = _product(g, h, cap)
    m = h.order
    flags = group_flags(p)
    report = VerificationReport("Prop3")
    rng = np.random.default_rng(seed)
    for wi, text in enumerate(words):
        w = parse_word(text) if isinstance(text, str) else text
        names = variables(w)
        if p.order <= exhaustive_limit:
            env = _exhaustive_bindings(p.order, names)
            mode = "exhaustive"
        else:
            env = {n: rng.integers(0, p.order, size=samples) for n in names}
            mode = "random"
        whole = eval_indices(w, p, env)
        left = eval_indices(w, g, {k: v // m for k, v in env.items()})
        right = eval_indices(w, h, {k: v % m for k, v in env.items()})
        bad = np.flatnonzero(whole != left * m + right)
        wit = {}
        if bad.size:
            i = bad[0]
            wit = {n: p.labels[env[n][i]] for n in names}
            wit["product_value"] = p.labels[whole[i]]
            wit["componentwise_value"] = f"({g.labels[left[i]]},{h.labels[right[i]]})"
        n_cases = int(np.asarray(whole).size)
        report.instances.append(InstanceRecord(
            [g.name, h.name], None,
            {"claim": "Prop3", "word": text if isinstance(text, str) else str(text),
             "mode": mode, "cases": n_cases},
            not bad.size, wit, flags, key=key0 + (wi,)))
    report.wall_time = time.perf_counter() - t0
    return report


# --------------------------------------------------------------------------
# orchestration


def run_claim(claim: str, groups: list[FiniteGroup], n_max: int = DEFAULT_ENGEL_DEPTH,
              cap: int = PRODUCT_ORDER_CAP) -> VerificationReport:
    """Run a claim (or claim family) over a group list.

    Single-group claims run on each group; product claims run on every
    ordered pair ``(G, H)`` from the list, skipping pairs above ``cap``.
    """
    claims = resolve_claims(claim)
    label = claim if claim.lower() in CLAIM_GROUPS else claims[0]
    label = {"prop1": "Prop1", "thm4": "Thm4", "thm5": "Thm5", "conj6": "Conj6"}.get(
        label.lower(), label)
    t0 = time.perf_counter()
    report = VerificationReport(label)
    skipped = []
    single = [c for c in claims if c in SINGLE_GROUP_CLAIMS]
    product = [c for c in claims if c in PRODUCT_CLAIMS]
    for gi, g in enumerate(groups):
        prop1_parts = [c for c in single if c.startswith("Prop1")]
        if prop1_parts:
            r = check_prop1(g, prop1_parts)
            for rec in r.instances:
                rec.key = (gi,) + rec.key[1:]
            report.instances.extend(r.instances)
        for c, fn in (("Absorption", check_absorption_identity),
                      ("Expansion", check_expansion_identity)):
            if c in single:
                r = fn(g)
                for rec in r.instances:
                    rec.key = (gi, c)
                report.instances.extend(r.instances)
    if product:
        pairs = list(itertools.product(range(len(groups)), repeat=2))
        for pi, (i, j) in enumerate(pairs):
            g, h = groups[i], groups[j]
            if g.order * h.order > cap:
                skipped.append({"groups": [g.name, h.name],
                                "reason": f"order {g.order * h.order} exceeds cap {cap}"})
                continue
            report.instances.extend(_run_product_claims(product, g, h, n_max, cap, (pi,)).instances)
        report.skipped = skipped if skipped else None
    report.wall_time = time.perf_counter() - t0
    return report.sort()


def _run_product_claims(claims, g, h, n_max, cap, key0) -> VerificationReport:
    out = VerificationReport("")
    thm4 = [c for c in claims if c.startswith("Thm4")]
    thm5 = [c for c in claims if c.startswith("Thm5")]
    conj6 = [c for c in claims if c.startswith("Conj6")]
    if "Prop3" in claims:
        out.instances += check_prop3(g, h, cap=cap, key0=key0 + (0,)).instances
    if thm4:
        out.instances += check_theorem4(g, h, n_max, thm4, cap, key0 + (1,)).instances
    if thm5:
        out.instances += check_theorem5(g, h, thm5, cap, key0 + (2,)).instances
    if conj6:
        out.instances += check_conjecture6(g, h, conj6, cap, key0 + (3,)).instances
    return out


def search_counterexamples(catalog: list[FiniteGroup], claim: CheckSpec | str = "conj6.1",
                           exhaustive: bool = False, cap: int = PRODUCT_ORDER_CAP,
                           n_max: int = DEFAULT_ENGEL_DEPTH) -> VerificationReport:
    """Check a product claim over ordered pairs of the catalog, smallest products first.

    Without ``exhaustive`` the search stops after the first pair that yields a
    failure.  The minimal counterexample is the failure with the smallest
    product order, then the least element index.
    """
    if isinstance(claim, CheckSpec):
        claims, n_max, name = claim.claims, claim.engel_depth_max, claim.claim
    else:
        claims, name = resolve_claims(claim), claim
    if any(c not in PRODUCT_CLAIMS for c in claims):
        raise GroupError(f"search needs a direct-product claim, got {name!r}")
    t0 = time.perf_counter()
    pairs = sorted(itertools.product(range(len(catalog)), repeat=2),
                   key=lambda ij: (catalog[ij[0]].order * catalog[ij[1]].order, ij))
    report = VerificationReport(claims[0] if len(claims) == 1 else name)
    report.skipped = []
    best = None
    for rank, (i, j) in enumerate(pairs):
        g, h = catalog[i], catalog[j]
        order = g.order * h.order
        if order > cap:
            report.skipped.append({"groups": [g.name, h.name],
                                   "reason": f"order {order} exceeds cap {cap}"})
            continue
        part = _run_product_claims(claims, g, h, n_max, cap, (rank,))
        part.sort()
        report.instances.extend(part.instances)
        failed = part.failures
        if failed and best is None:
            first = failed[0]
            best = {"groups": first.groups, "element": first.element,
                    "product_order": order, "params": first.params}
        if failed and not exhaustive:
            break
    report.minimal_counterexample = best
    report.wall_time = time.perf_counter() - t0
    return report.sort()


# --------------------------------------------------------------------------
# structure summary


@dataclass
class StructureSummary:
    name: str
    order: int
    abelian: bool
    solvable: bool
    metabelian: bool
    derived_series_orders: list[int]
    center: list[str]
    normal_subgroup_count: int | None
    nonabelian_quotient: list[str] | None
    notes: list[str]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "abelian": self.abelian,
            "solvable": self.solvable,
            "metabelian": self.metabelian,
            "derived_series_orders": self.derived_series_orders,
            "center": self.center,
            "normal_subgroup_count": self.normal_subgroup_count,
            "nonabelian_quotient": self.nonabelian_quotient,
            "notes": self.notes,
            "tool_version": __version__,
        }

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"{k}: {_render(v) if isinstance(v, list) and k != 'notes' else v}"
                 for k, v in d.items() if k not in ("notes", "tool_version")]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def analyze_group(g: FiniteGroup, enumeration_cap: int = SUBGROUP_ENUMERATION_CAP) -> StructureSummary:
    """Order, abelian/solvable/metabelian flags, derived series, center, normal subgroups.

    ``nonabelian_quotient`` lists the smallest nontrivial normal subgroup N
    with G/N nonabelian (None if there is none or enumeration is over cap).
    """
    series = derived_series(g)
    solvable = len(series[-1]) == 1
    metabelian = is_metabelian(g)
    normals = None
    witness = None
    if g.order <= enumeration_cap:
        normals = enumerate_normal_subgroups(g, enumeration_cap)
        for n in normals:
            if 1 < len(n) < g.order and not quotient(g, n).is_abelian():
                witness = n.labels()
                break
    notes = []
    if metabelian and witness is not None:
        notes.append("derived subgroup is abelian (metabelian), yet G/N is nonabelian for "
                     f"the normal subgroup N of order {len(witness)}; the two readings of "
                     "'metabelian' disagree here")
    return StructureSummary(
        name=g.name, order=g.order, abelian=is_abelian(g), solvable=solvable,
        metabelian=metabelian, derived_series_orders=[len(s) for s in series],
        center=center(g).labels(),
        normal_subgroup_count=None if normals is None else len(normals),
        nonabelian_quotient=witness, notes=notes)
