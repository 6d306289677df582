import pytest

from pasp.core import CapExceededError, build_election
from pasp.oracle import (
    brute_equilibria,
    brute_equilibrium_president,
    brute_necessary_president,
    brute_possible_president,
    brute_recognize_pasp,
    brute_single_peaked_axis,
    enumerate_schemes,
)


def test_enumeration(thm4, thm5):
    assert list(enumerate_schemes(thm4)) == [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")]
    assert len(list(enumerate_schemes(thm5))) == 4
    single = build_election(["a", "b"], [["a"], ["b"]], [["a", "b"]])
    assert list(enumerate_schemes(single)) == [("a", "b")]


def test_cap(thm4, monkeypatch):
    with pytest.raises(CapExceededError):
        list(enumerate_schemes(thm4, cap=3))
    monkeypatch.setenv("PASP_MAX_SCHEMES", "2")
    with pytest.raises(CapExceededError):
        brute_equilibria(thm4)


def test_fixture_equilibria(thm4, thm5):
    assert brute_equilibria(thm4) == []
    assert brute_equilibria(thm5) == []
    single = build_election(["a", "b"], [["a"], ["b"]], [["b", "a"]])
    assert brute_equilibria(single) == [("a", "b")]


def test_thm4_queries(thm4):
    assert brute_possible_president(thm4, "A") is not None
    assert not brute_necessary_president(thm4, "A")
    assert brute_equilibrium_president(thm4, "A") is None


def test_single_party_queries():
    e = build_election(["x", "y"], [["x", "y"]], [["y", "x"]])
    assert brute_possible_president(e, 0) == (("x",), 1)
    assert brute_necessary_president(e, 0)
    assert brute_equilibrium_president(e, 0) == (("x",), 1)


def test_brute_recognition(sec3, intro):
    assert brute_recognize_pasp(sec3) == (0, 1, 2, 3)
    assert brute_recognize_pasp(intro) is not None
    many = build_election([str(i) for i in range(7)], [[str(i)] for i in range(7)], [])
    with pytest.raises(CapExceededError):
        brute_recognize_pasp(many)


def test_intro_not_single_peaked(intro, sec3):
    assert brute_single_peaked_axis(intro) is None
    e = build_election(["a", "b", "c"], [["a", "b", "c"]], [["b", "a", "c"], ["c", "b", "a"]])
    assert brute_single_peaked_axis(e) is not None
