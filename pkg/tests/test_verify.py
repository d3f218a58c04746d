import json

import pytest

from engelgroups import GroupError, OrderCapExceeded
from engelgroups.catalog import DEFAULT_CATALOG, catalog
from engelgroups.verify import (CheckSpec, analyze_group, check_absorption_identity,
                                check_conjecture6, check_expansion_identity, check_prop1,
                                check_prop3, check_theorem4, check_theorem5, resolve_claims,
                                run_claim, search_counterexamples)

import oracles


def by_element(report, claim):
    return {r.element: r for r in report.instances if r.params.get("claim") == claim}


class TestClaims:
    @pytest.mark.parametrize("text, ids", [
        ("thm4", ("Thm4.1", "Thm4.2")),
        ("Conj6.1", ("Conj6.1",)),
        ("PROP1", ("Prop1.1", "Prop1.2", "Prop1.3", "Prop1.4")),
        ("expansion", ("Expansion",)),
    ])
    def test_resolve(self, text, ids):
        assert resolve_claims(text) == ids

    def test_unknown(self):
        with pytest.raises(GroupError):
            resolve_claims("thm9")
        with pytest.raises(ValueError):
            CheckSpec("thm4", ["S3"], engel_depth_max=0)


class TestProp1:
    @pytest.mark.parametrize("name", ["S3", "D8", "Q8", "A4", "S4", "K4xS3"])
    def test_parts_one_to_three_hold(self, name):
        report = check_prop1(catalog(name), parts=["Prop1.1", "Prop1.2", "Prop1.3"])
        assert report.held
        assert report.summary()["checked"] == 3 * catalog(name).order

    def test_part_four_in_s3(self):
        report = check_prop1(catalog("S3"), parts=["Prop1.4"])
        verdicts = {r.element: r.verdict for r in report.instances}
        assert verdicts == {"e": True, "(1 2)": False, "(1 3)": False, "(2 3)": False,
                            "(1 2 3)": True, "(1 3 2)": True}
        wit = by_element(report, "Prop1.4")["(1 2)"].witnesses
        assert wit["e1star"] == ["e"]
        assert wit["only_in_r_1"] == ["(1 2)"]

    @pytest.mark.parametrize("name", ["S3", "D8", "Q8", "A4", "S3xC2"])
    def test_part_four_matches_oracle(self, name):
        ng = oracles.by_name(name)
        report = check_prop1(catalog(name), parts=["Prop1.4"])
        for r in report.instances:
            a = ng.by_label(r.element)
            assert r.verdict == (set(ng.e1star(a)) == set(ng.r_n(a, 1)))


class TestIdentities:
    @pytest.mark.parametrize("name", ["S3", "D8", "Q8"])
    def test_hold(self, name):
        assert check_absorption_identity(catalog(name)).held
        assert check_expansion_identity(catalog(name)).held

    def test_case_counts(self):
        r = check_expansion_identity(catalog("S3"))
        assert r.instances[0].params["cases"] == 6 ** 4
        r = check_absorption_identity(catalog("S3"))
        # pairs (a, u) that commute in S3: 18, times 6 choices of x
        assert r.instances[0].params["cases"] == 18 * 6


class TestProducts:
    def test_theorem4(self):
        r = check_theorem4(catalog("S3"), catalog("D8"), n_max=3)
        assert r.held
        assert r.summary()["checked"] == 3 * (1 + 48)

    def test_theorem5(self):
        r = check_theorem5(catalog("Q8"), catalog("S3"))
        assert r.held
        assert r.summary()["checked"] == 2 * 48

    def test_conjecture6_examples(self):
        r = check_conjecture6(catalog("S3"), catalog("S3"), parts=["Conj6.1"])
        rec = by_element(r, "Conj6.1")["((1 2),(1 2))"]
        assert not rec.verdict
        assert rec.witnesses["e1star"] == ["(e,e)"]
        assert len(rec.witnesses["r_1"]) == 4

        r = check_conjecture6(catalog("S3"), catalog("C2"), parts=["Conj6.1"])
        rec = by_element(r, "Conj6.1")["((1 2),e)"]
        assert not rec.verdict
        assert rec.witnesses["e1star"] == ["(e,e)", "(e,g)"]

    def test_conjecture6_part2_holds(self):
        assert check_conjecture6(catalog("S3"), catalog("D8"), parts=["Conj6.2"]).held

    def test_golden_element_holds(self):
        r = check_conjecture6(catalog("K4"), catalog("S3"), parts=["Conj6.1"])
        assert by_element(r, "Conj6.1")["(c,(1 3 2))"].verdict

    @pytest.mark.parametrize("pair", [("C2", "S3"), ("S3", "C3"), ("K4", "S3")])
    def test_conjecture6_matches_oracle(self, pair):
        ng = oracles.by_name("x".join(pair))
        r = check_conjecture6(catalog(pair[0]), catalog(pair[1]), parts=["Conj6.1"])
        for rec in r.instances:
            a = ng.by_label(rec.element)
            assert rec.verdict == (set(ng.e1star(a)) == set(ng.r_n(a, 1)))

    def test_prop3_modes(self):
        small = check_prop3(catalog("C2"), catalog("S3"))
        assert small.held and {r.params["mode"] for r in small.instances} == {"exhaustive"}
        big = check_prop3(catalog("A4"), catalog("S3"), samples=2000)
        assert big.held and {r.params["mode"] for r in big.instances} == {"random"}

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            check_theorem5(catalog("A5"), catalog("A4"))


class TestReports:
    def test_schema_order(self):
        r = run_claim("thm5", [catalog("C2"), catalog("S3")])
        d = json.loads(r.to_json())
        assert list(d) == ["claim", "instances", "summary", "tool_version"]
        assert list(d["instances"][0]) == ["groups", "element", "params", "verdict",
                                           "witnesses", "flags"]
        assert list(d["instances"][0]["flags"]) == ["solvable", "metabelian"]
        assert list(d["summary"]) == ["checked", "held", "failed"]

    def test_timing_is_opt_in(self):
        r = run_claim("prop1", [catalog("S3")])
        assert "wall_time" not in r.to_dict()
        assert "wall_time" in r.to_dict(timing=True)

    def test_deterministic(self):
        groups = [catalog(n) for n in ("C2", "S3", "Q8")]
        a = run_claim("conj6", groups).to_json()
        b = run_claim("conj6", groups).to_json()
        assert a == b

    def test_skipped_pairs(self):
        r = run_claim("thm5", [catalog("A4"), catalog("S4")], cap=200)
        assert r.skipped == [{"groups": ["A4", "S4"], "reason": "order 288 exceeds cap 200"},
                             {"groups": ["S4", "A4"], "reason": "order 288 exceeds cap 200"},
                             {"groups": ["S4", "S4"], "reason": "order 576 exceeds cap 200"}]
        assert {tuple(x.groups) for x in r.instances} == {("A4", "A4")}

    def test_text(self):
        r = run_claim("prop1.4", [catalog("S3")])
        text = r.to_text(failures_only=True)
        assert "[FAILED] S3 at (1 2)" in text
        assert "[held]" not in text
        assert text.endswith("summary: checked=6 held=3 failed=3")


class TestSearch:
    def test_first_failure(self):
        groups = [catalog(n) for n in DEFAULT_CATALOG]
        r = search_counterexamples(groups, "conj6.1")
        m = r.minimal_counterexample
        assert m["groups"] == ["C2", "S3"] and m["element"] == "(e,(1 2))"
        assert m["product_order"] == 12
        # stops after the first failing pair
        assert r.instances[-1].groups == ["C2", "S3"]

    def test_rejects_single_group_claim(self):
        with pytest.raises(GroupError):
            search_counterexamples([catalog("S3")], "prop1")

    def test_checkspec(self):
        spec = CheckSpec("thm4", ["C2", "S3"], engel_depth_max=2)
        r = search_counterexamples([catalog("C2"), catalog("S3")], spec, exhaustive=True)
        assert r.held and r.minimal_counterexample is None
        assert max(x.params["n"] for x in r.instances) == 2


class TestAnalyze:
    def test_k4_s3(self):
        s = analyze_group(catalog("K4xS3"))
        assert (s.order, s.solvable, s.metabelian) == (24, True, True)
        assert s.derived_series_orders == [24, 3, 1]
        assert s.normal_subgroup_count == 21
        assert s.nonabelian_quotient is not None and s.notes

    def test_a5(self):
        s = analyze_group(catalog("A5"))
        assert not s.solvable and s.normal_subgroup_count == 2
        assert s.center == ["e"]
