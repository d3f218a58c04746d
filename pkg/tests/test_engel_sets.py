import pytest

from engelgroups import GroupMismatch
from engelgroups.catalog import catalog
from engelgroups.engel_sets import (SET_FUNCTIONS, centralizer, centralizer_of_normal_closure,
                                    intersect_conjugate_r1, left_e1, right_e1star, right_engel_set,
                                    right_engel_set_at)
from engelgroups.structure import is_normal

import oracles

GOLDEN = {"(e,e)", "(a,e)", "(b,e)", "(c,e)",
          "(e,(1 2 3))", "(a,(1 2 3))", "(b,(1 2 3))", "(c,(1 2 3))",
          "(e,(1 3 2))", "(a,(1 3 2))", "(b,(1 3 2))", "(c,(1 3 2))"}

ORACLE_GROUPS = ["C4", "K4", "S3", "D8", "Q8", "A4", "S3xC2", "K4xS3"]


def _oracle_sets(ng, a):
    return {
        "centralizer": ng.centralizer(a),
        "left_e1": ng.left_e1(a),
        "e1star": ng.e1star(a),
        "closure-centralizer": ng.closure_centralizer(a),
        "conj-intersection": ng.conj_intersection(a),
        "r_1": ng.r_n(a, 1),
        "r_2": ng.r_n(a, 2),
        "r_3": ng.r_n(a, 3),
    }


@pytest.mark.parametrize("name", ORACLE_GROUPS)
def test_every_set_matches_oracle(name):
    g = catalog(name)
    ng = oracles.by_name(name)
    for e in g:
        expect = _oracle_sets(ng, ng.by_label(e.label))
        got = {
            "centralizer": centralizer(g, e),
            "left_e1": left_e1(g, e),
            "e1star": right_e1star(g, e),
            "closure-centralizer": centralizer_of_normal_closure(g, e),
            "conj-intersection": intersect_conjugate_r1(g, e),
            "r_1": right_engel_set_at(g, e, 1),
            "r_2": right_engel_set_at(g, e, 2),
            "r_3": right_engel_set_at(g, e, 3),
        }
        for key in expect:
            assert set(got[key].labels()) == ng.labels(expect[key]), (name, e.label, key)


@pytest.mark.parametrize("name", ["S3", "D8", "Q8", "A4", "S3xC2"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_universal_engel_set_matches_oracle(name, n):
    g = catalog(name)
    ng = oracles.by_name(name)
    assert set(right_engel_set(g, n).labels()) == ng.labels(ng.r_n_all(n))


def test_golden_k4_s3():
    g = catalog("K4xS3")
    e = "(c,(1 3 2))"
    assert set(right_engel_set_at(g, e, 1).labels()) == GOLDEN
    assert set(right_e1star(g, e).labels()) == GOLDEN
    assert is_normal(g, right_e1star(g, e))


def test_prop1_4_fails_in_s3():
    s3 = catalog("S3")
    t = s3.by_label("(1 2)")
    assert right_e1star(s3, t).labels() == ["e"]
    assert set(right_engel_set_at(s3, t, 1).labels()) == {"e", "(1 2)"}


@pytest.mark.parametrize("name", ["C6", "K4", "S3", "D8", "Q8", "A4", "S4", "D12", "K4xS3", "A5"])
def test_invariants(name):
    g = catalog(name)
    for e in g:
        c = centralizer(g, e)
        r1 = right_engel_set_at(g, e, 1)
        star = right_e1star(g, e)
        assert left_e1(g, e) == r1 == c
        assert star == centralizer_of_normal_closure(g, e) == intersect_conjugate_r1(g, e)
        assert star.is_subgroup() and is_normal(g, star)
        assert star <= left_e1(g, e)
        assert e in c and 0 in star
        prev = r1
        for n in range(2, 5):
            cur = right_engel_set_at(g, e, n)
            assert prev <= cur
            prev = cur
    for n in range(1, 4):
        univ = right_engel_set(g, n)
        assert all(univ <= right_engel_set_at(g, e, n) for e in g)


def test_abelian_group_sets_are_everything():
    g = catalog("C4xK4")
    for e in g:
        assert right_e1star(g, e).order == g.order
        assert right_engel_set_at(g, e, 1).order == g.order


def test_label_and_element_arguments_agree():
    g = catalog("D8")
    assert right_e1star(g, "s") == right_e1star(g, g.by_label("s"))
    with pytest.raises(GroupMismatch):
        centralizer(g, catalog("Q8").element(2))


def test_depth_must_be_positive():
    g = catalog("S3")
    with pytest.raises(ValueError):
        right_engel_set_at(g, "e", 0)
    with pytest.raises(ValueError):
        right_engel_set(g, 0)


def test_set_function_names():
    assert set(SET_FUNCTIONS) == {"r_n", "e1star", "left_e1", "centralizer",
                                  "closure-centralizer", "conj-intersection"}
