import pytest
from hypothesis import given

from conftest import pasp_elections
from pasp.core import NotPASPError, build_election, party_scores
from pasp.equilibrium import equilibrium_president, partition_voters
from pasp.oracle import (
    brute_left_pp_scores,
    brute_necessary_president,
    brute_possible_president,
    brute_possible_president_excluding,
)
from pasp.president import compute_pp_tables, necessary_president, possible_president, possible_president_excluding
from pasp.recognition import recognize_pasp


def test_thm4(thm4):
    assert possible_president(thm4, "A") == (("a1", "b1"), 2)
    assert possible_president(thm4, "B") == (("a1", "b2"), 2)
    assert possible_president_excluding(thm4, "A", "B") == ("a1", "b1")
    assert not necessary_president(thm4, "A")
    assert not necessary_president(thm4, "B")


def test_single_party():
    e = build_election(["x", "y"], [["x", "y"]], [["y", "x"]])
    assert possible_president(e, 0) == (("x",), 1)
    assert necessary_president(e, 0)


def test_dominant_singleton_cannot_be_excluded():
    e = build_election(["a", "b1", "b2"], [["a"], ["b1", "b2"]], [["a", "b1", "b2"], ["a", "b2", "b1"]])
    assert possible_president_excluding(e, 1, 0) is None
    assert necessary_president(e, 0)


def test_same_party_rejected(thm4):
    with pytest.raises(ValueError):
        possible_president_excluding(thm4, "A", "A")


def test_zero_voters_everyone_wins():
    e = build_election(["a", "b"], [["a"], ["b"]], [])
    assert possible_president(e, 0) == (("a", "b"), 0)
    assert necessary_president(e, 0) and necessary_president(e, 1)


def test_not_pasp():
    e = build_election(
        ["a", "b", "c"], [["a"], ["b"], ["c"]], [["a", "b", "c"], ["b", "c", "a"], ["c", "a", "b"]]
    )
    with pytest.raises(NotPASPError):
        possible_president(e, 0)
    with pytest.raises(NotPASPError):
        necessary_president(e, 0)


@given(pasp_elections(max_parties=5))
def test_matches_oracle(e):
    for p in range(e.n_parties):
        found = possible_president(e, p)
        assert found == brute_possible_president(e, p)
        if found is not None:
            scheme, score = found
            scores = party_scores(e, scheme)
            assert scores[p] == score == max(scores)
        assert necessary_president(e, p) == brute_necessary_president(e, p)
        for q in range(e.n_parties):
            if q != p:
                assert possible_president_excluding(e, p, q) == brute_possible_president_excluding(e, p, q)


@given(pasp_elections(max_parties=4, max_voters=7))
def test_pp_tables_match_oracle(e):
    axis = recognize_pasp(e)
    part = partition_voters(e, axis)
    for kappa in range(len(axis)):
        for s in range(e.n_voters + 1):
            for excluded in [None] + [q for q in range(e.n_parties) if q != axis[kappa]]:
                t = compute_pp_tables(e, axis, part, kappa, s, excluded)
                got = {i: {c: set(v) for c, v in lvl.items()} for i, lvl in t.left.items()}
                assert got == brute_left_pp_scores(e, axis, kappa, s, excluded)


@given(pasp_elections(max_parties=4))
def test_containment(e):
    for p in range(e.n_parties):
        if equilibrium_president(e, p) is not None:
            assert possible_president(e, p) is not None
        if necessary_president(e, p) and e.n_voters:
            assert possible_president(e, p) is not None
