"""Elections, Plurality over reduced elections, and Nash-equilibrium predicates.

A nomination scheme is a tuple of candidate ids, one per party, in party
index order.  Scores are plain integers; a party wins when its nominee is
among the maximum-score nominees (no tie-breaking).
"""

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class ElectionError(ValueError):
    """Raised for malformed elections or nomination schemes."""


class NotPASPError(ValueError):
    """Raised when a profile is not party-aligned single-peaked."""


class CapExceededError(RuntimeError):
    """Raised when an exhaustive search would exceed its configured cap."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed (a bug, never an input error)."""


Scheme = tuple


@dataclass(frozen=True)
class Election:
    """Candidates partitioned into parties, plus one strict ranking per voter.

    ``parties`` holds candidate ids per party; ``votes`` holds full rankings,
    most preferred first.  Use :func:`build_election` rather than calling the
    constructor with unnormalized data.
    """

    candidates: tuple
    parties: tuple
    votes: tuple
    party_names: tuple = ()
    labels: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        cands = self.candidates
        if not self.parties:
            raise ElectionError("an election needs at least one party")
        index = {}
        for i, c in enumerate(cands):
            if c in index:
                raise ElectionError(f"duplicate candidate id {c!r}")
            index[c] = i
        if not self.party_names:
            object.__setattr__(self, "party_names", tuple(f"P{i + 1}" for i in range(len(self.parties))))
        if len(self.party_names) != len(self.parties):
            raise ElectionError("party_names must match parties")
        if len(set(self.party_names)) != len(self.party_names):
            raise ElectionError("duplicate party id")

        party_of = [-1] * len(cands)
        for p, members in enumerate(self.parties):
            if not members:
                raise ElectionError(f"party {p} ({self.party_names[p]}) is empty")
            for c in members:
                if c not in index:
                    raise ElectionError(f"party {p} ({self.party_names[p]}): unknown candidate {c!r}")
                if party_of[index[c]] != -1:
                    raise ElectionError(f"party {p} ({self.party_names[p]}): candidate {c!r} already in party {party_of[index[c]]}")
                party_of[index[c]] = p
        missing = [c for c, p in zip(cands, party_of) if p == -1]
        if missing:
            raise ElectionError(f"candidates not in any party: {missing}")

        rankings, positions = [], []
        m = len(cands)
        for v, vote in enumerate(self.votes):
            pos = [-1] * m
            rank = []
            for r, c in enumerate(vote):
                if c not in index:
                    raise ElectionError(f"vote {v}: unknown candidate {c!r}")
                ci = index[c]
                if pos[ci] != -1:
                    raise ElectionError(f"vote {v}: candidate {c!r} ranked twice")
                pos[ci] = r
                rank.append(ci)
            if len(rank) != m:
                absent = [c for c, p in zip(cands, pos) if p == -1]
                raise ElectionError(f"vote {v}: incomplete ranking (missing {absent})")
            rankings.append(tuple(rank))
            positions.append(tuple(pos))

        object.__setattr__(self, "index", index)
        object.__setattr__(self, "party_of_index", tuple(party_of))
        object.__setattr__(self, "members", tuple(tuple(index[c] for c in ms) for ms in self.parties))
        object.__setattr__(self, "rankings", tuple(rankings))
        object.__setattr__(self, "positions", tuple(positions))

    @property
    def n_voters(self):
        return len(self.votes)

    @property
    def n_parties(self):
        return len(self.parties)

    def party_of(self, candidate):
        """Index of the party containing ``candidate``."""
        return self.party_of_index[self.index[candidate]]

    def party_index(self, party):
        """Resolve a party given by index or by name."""
        if isinstance(party, int):
            if not 0 <= party < len(self.parties):
                raise ElectionError(f"no party with index {party}")
            return party
        try:
            return self.party_names.index(party)
        except ValueError:
            raise ElectionError(f"unknown party {party!r}") from None

    def restrict(self, parties):
        """Sub-election on the given parties (in the given order), votes restricted accordingly."""
        keep = [self.parties[p] for p in parties]
        kept = {c for ms in keep for c in ms}
        cands = tuple(c for c in self.candidates if c in kept)
        votes = tuple(tuple(c for c in vote if c in kept) for vote in self.votes)
        return Election(cands, tuple(keep), votes, tuple(self.party_names[p] for p in parties), self.labels)


def build_election(candidates, parties, votes, party_names=None, labels=None) -> Election:
    """Validate raw data and build an :class:`Election`.

    ``parties`` may be a sequence of member lists or a mapping from party id
    to member list.  Every vote must rank every candidate exactly once.
    """
    if isinstance(parties, Mapping):
        party_names = tuple(parties)
        parties = tuple(tuple(ms) for ms in parties.values())
    else:
        parties = tuple(tuple(ms) for ms in parties)
    return Election(
        tuple(candidates),
        parties,
        tuple(tuple(v) for v in votes),
        tuple(party_names) if party_names else (),
        dict(labels or {}),
    )


def check_scheme(election: Election, scheme: Sequence[str]) -> tuple:
    """Return ``scheme`` as a tuple after checking one nominee per party."""
    scheme = tuple(scheme)
    if len(scheme) != election.n_parties:
        raise ElectionError(f"scheme has {len(scheme)} nominees for {election.n_parties} parties")
    for p, c in enumerate(scheme):
        if c not in election.index or election.party_of(c) != p:
            raise ElectionError(f"nominee {c!r} is not a member of party {election.party_names[p]}")
    return scheme


def _score_list(election, nominee_idx):
    # nominee_idx: candidate index per party
    scores = [0] * len(nominee_idx)
    for pos in election.positions:
        best = min(range(len(nominee_idx)), key=lambda p: pos[nominee_idx[p]])
        scores[best] += 1
    return scores


def party_scores(election: Election, scheme) -> list:
    """Plurality score of each party's nominee, in party index order."""
    scheme = check_scheme(election, scheme)
    return _score_list(election, [election.index[c] for c in scheme])


def reduced_scores(election: Election, scheme) -> dict:
    """Map each nominee to the number of voters ranking it first among the nominees."""
    scheme = check_scheme(election, scheme)
    return dict(zip(scheme, _score_list(election, [election.index[c] for c in scheme])))


def winners(election: Election, scheme) -> frozenset:
    """Nominees attaining the maximum score."""
    scores = reduced_scores(election, scheme)
    top = max(scores.values())
    return frozenset(c for c, s in scores.items() if s == top)


def winning_parties(election: Election, scheme) -> frozenset:
    return frozenset(election.party_of(c) for c in winners(election, scheme))


def nash_deviations(election: Election, scheme) -> list:
    """All ``(party, alternative)`` pairs that are Nash deviations from ``scheme``.

    A losing party deviates by swapping in a party member that becomes a
    winner when everyone else keeps their nominee.
    """
    scheme = check_scheme(election, scheme)
    idx = [election.index[c] for c in scheme]
    scores = _score_list(election, idx)
    top = max(scores)
    out = []
    for p, s in enumerate(scores):
        if s == top:
            continue
        for alt in election.members[p]:
            if alt == idx[p]:
                continue
            trial = list(idx)
            trial[p] = alt
            new = _score_list(election, trial)
            if new[p] == max(new):
                out.append((p, election.candidates[alt]))
    return out


def is_nash_equilibrium(election: Election, scheme) -> bool:
    return not nash_deviations(election, scheme)
