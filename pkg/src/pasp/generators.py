"""Instance construction: Euclidean elections, random PASP and SP profiles, named fixtures.

All randomness goes through ``random.Random(seed)`` so a seed pins the
instance exactly.
"""

import random
import string
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Election, ElectionError, build_election


def is_single_peaked(ranking, axis) -> bool:
    """Whether every prefix of ``ranking`` is an interval of ``axis``."""
    where = {c: i for i, c in enumerate(axis)}
    if len(where) != len(ranking) or any(c not in where for c in ranking):
        raise ValueError("ranking and axis must hold the same candidates")
    if not ranking:
        return True
    lo = hi = where[ranking[0]]
    for c in ranking[1:]:
        i = where[c]
        if i == lo - 1:
            lo = i
        elif i == hi + 1:
            hi = i
        else:
            return False
    return True


def _names(sizes):
    if any(s < 1 for s in sizes):
        raise ValueError("party sizes must be positive")
    if len(sizes) <= 26:
        parties = list(string.ascii_uppercase[: len(sizes)])
        sep = ""
    else:
        parties = [f"P{i + 1}" for i in range(len(sizes))]
        sep = "_"
    members = [[f"{p.lower()}{sep}{j + 1}" for j in range(s)] for p, s in zip(parties, sizes)]
    return parties, members


def _sp_vote(rng, axis):
    """Random vote single-peaked on ``axis``: random peak, then a fair coin picks the side at each step."""
    peak = rng.randrange(len(axis))
    lo, hi = peak, peak
    vote = [axis[peak]]
    while len(vote) < len(axis):
        go_left = lo > 0 and (hi == len(axis) - 1 or rng.random() < 0.5)
        if go_left:
            lo -= 1
            vote.append(axis[lo])
        else:
            hi += 1
            vote.append(axis[hi])
    return vote


def random_pasp(seed, sizes, n_voters):
    """Random PASP election and its witness party axis (party indices, leftmost first).

    Every voter gets a private candidate axis refining the party axis
    (members of a party in random order) and a vote single-peaked on it.
    """
    rng = random.Random(seed)
    parties, members = _names(sizes)
    axis = list(range(len(sizes)))
    rng.shuffle(axis)
    votes = []
    for _ in range(n_voters):
        perceived = []
        for p in axis:
            block = list(members[p])
            rng.shuffle(block)
            perceived.extend(block)
        votes.append(_sp_vote(rng, perceived))
    cands = [c for ms in members for c in ms]
    return build_election(cands, members, votes, parties), tuple(axis)


def random_sp_pasp(seed, sizes, n_voters):
    """Random election with at most three parties that is both SP and PASP.

    Returns ``(election, candidate_axis)``; parties occupy contiguous blocks
    of the candidate axis.
    """
    if len(sizes) > 3:
        raise ValueError(f"at most 3 parties supported, got {len(sizes)}")
    rng = random.Random(seed)
    parties, members = _names(sizes)
    order = list(range(len(sizes)))
    rng.shuffle(order)
    cand_axis = []
    for p in order:
        block = list(members[p])
        rng.shuffle(block)
        cand_axis.extend(block)
    votes = [_sp_vote(rng, cand_axis) for _ in range(n_voters)]
    cands = [c for ms in members for c in ms]
    return build_election(cands, members, votes, parties), tuple(cand_axis)


def random_profile(seed, sizes, n_voters) -> Election:
    """Uniformly random rankings (no domain restriction)."""
    rng = random.Random(seed)
    parties, members = _names(sizes)
    cands = [c for ms in members for c in ms]
    votes = []
    for _ in range(n_voters):
        vote = list(cands)
        rng.shuffle(vote)
        votes.append(vote)
    return build_election(cands, members, votes, parties)


@dataclass
class EuclideanSpec:
    """Exact positions on the line.

    ``candidate_positions`` maps candidate -> coordinate (insertion order is
    the candidate order), ``party_of`` maps candidate -> party id (parties
    ordered by first appearance) and ``voters`` lists ``(coordinate,
    multiplicity)`` pairs.
    """

    candidate_positions: dict
    party_of: dict
    voters: list = field(default_factory=list)

    def __post_init__(self):
        self.candidate_positions = {c: Fraction(x) for c, x in self.candidate_positions.items()}
        self.voters = [(Fraction(x), int(m)) for x, m in self.voters]
        if set(self.party_of) != set(self.candidate_positions):
            raise ElectionError("party_of must assign every candidate")
        for x, m in self.voters:
            if m < 1:
                raise ElectionError(f"voter multiplicity at {x} must be positive")


def euclidean_election(spec: EuclideanSpec) -> Election:
    """Voters rank candidates by increasing distance; equidistant pairs are rejected."""
    cands = list(spec.candidate_positions)
    party_ids = list(dict.fromkeys(spec.party_of[c] for c in cands))
    parties = {p: [c for c in cands if spec.party_of[c] == p] for p in party_ids}
    votes = []
    for x, mult in spec.voters:
        dist = {c: abs(x - spec.candidate_positions[c]) for c in cands}
        ranking = sorted(cands, key=lambda c: dist[c])
        for a, b in zip(ranking, ranking[1:]):
            if dist[a] == dist[b]:
                raise ElectionError(f"voter at {x} is equidistant from {a!r} and {b!r}")
        votes.extend([ranking] * mult)
    return build_election(cands, parties, votes)


def random_euclidean(seed, sizes, n_voters) -> Election:
    """Random 1-D Euclidean election.

    Candidates sit on distinct multiples of 4 and voters on odd integers, so
    no voter is ever equidistant from two candidates.
    """
    rng = random.Random(seed)
    parties, members = _names(sizes)
    cands = [c for ms in members for c in ms]
    span = 4 * len(cands)
    spots = rng.sample(range(span), len(cands))
    positions = {c: 4 * s for c, s in zip(cands, spots)}
    party_of = {c: p for p, ms in zip(parties, members) for c in ms}
    voters = [(2 * rng.randrange(2 * span) + 1, 1) for _ in range(n_voters)]
    return euclidean_election(EuclideanSpec(positions, party_of, voters))


def thm5_spec() -> EuclideanSpec:
    positions = {"p1": 2, "p'1": 5, "p2": 7, "p'2": 11, "p3": 0, "p4": 12}
    party_of = {"p1": "P1", "p'1": "P1", "p2": "P2", "p'2": "P2", "p3": "P3", "p4": "P4"}
    voters = [(2, 5), (3, 2), (5, 6), (Fraction(89, 10), 2), (11, 7)]
    return EuclideanSpec(positions, party_of, voters)


def _thm4():
    return build_election(
        ["a1", "a2", "b1", "b2"],
        {"A": ["a1", "a2"], "B": ["b1", "b2"]},
        [["a1", "b1", "a2", "b2"], ["b1", "a2", "b2", "a1"], ["a2", "b2", "a1", "b1"]],
    )


def _example_sec3():
    return build_election(
        ["a", "b1", "b2", "c1", "c2", "d"],
        {"Pa": ["a"], "Pb": ["b1", "b2"], "Pc": ["c1", "c2"], "Pd": ["d"]},
        [
            ["c2", "b1", "c1", "d", "b2", "a"],
            ["b1", "c1", "b2", "c2", "a", "d"],
            ["b2", "c2", "c1", "d", "b1", "a"],
        ],
    )


def _intro():
    return build_election(
        ["a1", "a2", "b"],
        {"A": ["a1", "a2"], "B": ["b"]},
        [["a2", "b", "a1"], ["a1", "b", "a2"], ["a1", "a2", "b"]],
    )


FIXTURES = {
    "thm4": _thm4,
    "thm5": lambda: euclidean_election(thm5_spec()),
    "example-sec3": _example_sec3,
    "intro": _intro,
}


def paper_fixture(name) -> Election:
    """Named reference instance: ``thm4``, ``thm5``, ``example-sec3`` or ``intro``."""
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
