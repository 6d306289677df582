import pytest
from hypothesis import given

from conftest import shapes
from pasp.generators import FIXTURES, paper_fixture, random_pasp
from pasp.profile_io import ProfileError, make_report, parse_profile, serialize_profile, serialize_report

THM4 = """\
counts 4 2 3
candidate a1
candidate a2
candidate b1
candidate b2
party A a1 a2
party B b1 b2
a1 b1 a2 b2
b1 a2 b2 a1
a2 b2 a1 b1
"""


def test_serialize_thm4(thm4):
    assert serialize_profile(thm4) == THM4
    assert parse_profile(THM4) == thm4


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_round_trip(name):
    e = paper_fixture(name)
    text = serialize_profile(e)
    assert parse_profile(text) == e
    assert serialize_profile(parse_profile(text)) == text


@given(shapes(max_parties=4, max_voters=10))
def test_random_round_trip(shape):
    e = random_pasp(*shape)[0]
    assert parse_profile(serialize_profile(e)) == e


def test_multiplicity(thm5):
    text = serialize_profile(thm5)
    assert "5: p1 p3 p'1 p2 p'2 p4" in text.splitlines()
    assert parse_profile(text).n_voters == 22


def test_comments_and_display_names():
    text = """\
# a small profile
counts 2 1 2   # header
candidate x  Xavier Q
candidate y
party P x y
2: y x   # both voters
"""
    e = parse_profile(text)
    assert e.labels == {"x": "Xavier Q"}
    assert e.votes == (("y", "x"), ("y", "x"))
    assert serialize_profile(e) == "counts 2 1 2\ncandidate x Xavier Q\ncandidate y\nparty P x y\n2: y x\n"


def _error(text):
    with pytest.raises(ProfileError) as info:
        parse_profile(text)
    return info.value


HEAD = "counts 2 1 1\ncandidate x\ncandidate y\nparty P x y\n"


@pytest.mark.parametrize(
    "text, line, column, message",
    [
        (HEAD + "x z\n", 5, 3, "unknown candidate"),
        (HEAD + "x x\n", 5, 3, "duplicate in ranking"),
        (HEAD + "x\n", 5, 2, "missing candidate"),
        ("counts 2 one 1\n", 1, 1, "malformed count header"),
        ("candidate x\n", 1, 1, "malformed count header"),
        ("counts 2 2 0\ncandidate x\ncandidate y\nparty P x\nparty Q x y\n", 5, 9, "party overlap"),
        ("counts 1 1 0\ncandidate party\n", 2, 11, "invalid candidate id"),
        ("counts 1 1 0\ncandidate x\ncandidate x\n", 3, 11, "duplicate candidate"),
        (HEAD + "0: x y\n", 5, 1, "multiplicity"),
        ("counts 2 1 2\ncandidate x\ncandidate y\nparty P x y\nx y\n", 1, 1, "count header says"),
        ("counts 2 1 0\ncandidate x\ncandidate y\nparty P x\n", 5, 1, "not in any party"),
    ],
)
def test_diagnostics(text, line, column, message):
    err = _error(text)
    assert (err.line, err.column) == (line, column)
    assert message in str(err)
    assert str(err).startswith(f"line {line}, column {column}:")


def test_report_text_and_structured(thm4):
    report = make_report(thm4, "equilibrium", "none", axis=(0, 1), oracle="agree")
    text = serialize_report(report)
    assert "answer: none" in text and "axis: A < B" in text
    assert "  a2 b2 | 3 0 | winners A" in text
    structured = serialize_report(report, "structured")
    assert "axis=A,B" in structured.splitlines()
    assert "scheme=a1,b2 scores=1,2 winners=B" in structured.splitlines()
    with pytest.raises(ValueError):
        serialize_report(report, "xml")


def test_report_omits_large_tables():
    e = random_pasp(0, [3, 3, 3, 3], 2)[0]
    assert "table" not in make_report(e, "recognize", "yes")


def test_report_is_deterministic(thm5):
    a = serialize_report(make_report(thm5, "possible", "yes", party=0, witness=("p1", "p'2", "p3", "p4"), score=13))
    b = serialize_report(make_report(thm5, "possible", "yes", party=0, witness=("p1", "p'2", "p3", "p4"), score=13))
    assert a == b and "witness: p1 p'2 p3 p4" in a
