"""Recognition of party-aligned single-peaked (PASP) profiles.

A party axis is a tuple of party indices, leftmost first.  The recognizer
places the parties owning some voter's last-ranked candidate at the two ends,
grows the placed blocks inwards while some vote forces the next party, and
recurses on the unplaced middle once the placed candidates sit at the bottom
of every vote.  The result is always re-checked vote by vote.
"""

from typing import NamedTuple, Optional

from .core import Election


class ExtremalPlacement(NamedTuple):
    """Parties fixed at the ends of the axis: ``left`` leftmost first, ``right`` rightmost last."""

    left: tuple
    right: tuple


def canonical_axis(axis) -> tuple:
    """Of an axis and its reverse, the one whose first party has the smaller index."""
    axis = tuple(axis)
    if axis and axis[0] > axis[-1]:
        return axis[::-1]
    return axis


def _check_axis(election, axis):
    if sorted(axis) != list(range(election.n_parties)):
        raise ValueError(f"axis {axis!r} is not a permutation of the {election.n_parties} parties")


def _vote_ok(pos, axis, members) -> bool:
    # per-party best (h) and worst (l) positions, along the axis
    hi = [min(pos[c] for c in members[p]) for p in axis]
    lo = [max(pos[c] for c in members[p]) for p in axis]
    m = len(axis)
    j = hi.index(0)
    if 0 < j < m - 1 and not (lo[j] < hi[j - 1] or lo[j] < hi[j + 1]):
        return False
    for i in range(j + 1, m - 1):
        if lo[i] > hi[i + 1]:
            return False
    for i in range(1, j):
        if lo[i] > hi[i - 1]:
            return False
    return True


def verify_vote_under_axis(vote, axis, election: Election) -> bool:
    """Whether a single ranking is PASP for the given party axis.

    Let ``h_i``/``l_i`` be the voter's best/worst candidate of the i-th party
    on the axis and ``j`` the party holding the top choice.  The vote
    qualifies iff ``l_j`` beats ``h_{j-1}`` or ``h_{j+1}`` when ``j`` is
    interior, ``l_i`` beats ``h_{i+1}`` right of ``j`` and ``l_i`` beats
    ``h_{i-1}`` left of ``j``.
    """
    axis = tuple(axis)
    _check_axis(election, axis)
    pos = [0] * len(election.candidates)
    if sorted(vote) != sorted(election.candidates):
        raise ValueError("vote must rank every candidate exactly once")
    for r, c in enumerate(vote):
        pos[election.index[c]] = r
    return _vote_ok(pos, axis, election.members)


def verify_profile_under_axis(election: Election, axis) -> bool:
    axis = tuple(axis)
    _check_axis(election, axis)
    return all(_vote_ok(pos, axis, election.members) for pos in election.positions)


def bottom_parties(election: Election, remaining=None) -> set:
    """Parties holding some voter's last-ranked candidate (among ``remaining`` parties)."""
    party_of = election.party_of_index
    if remaining is None:
        return {party_of[r[-1]] for r in election.rankings}
    out = set()
    for ranking in election.rankings:
        for c in reversed(ranking):
            if party_of[c] in remaining:
                out.add(party_of[c])
                break
    return out


def vote_imposed_extension(election: Election, placement: ExtremalPlacement, remaining=None) -> Optional[tuple]:
    """Next party placement forced by some vote, or None.

    Scans voters in order for the first one whose placed candidates do not
    form the bottom of its (restricted) ranking.  With ``a`` its worst
    unplaced candidate and ``b`` its best placed one, ``a``'s party goes
    directly after the left block (side ``"left"``) if ``b`` is on the right,
    and directly before the right block (side ``"right"``) otherwise.
    """
    party_of = election.party_of_index
    if remaining is None:
        remaining = set(range(election.n_parties))
    left, right = set(placement.left), set(placement.right)
    placed = left | right
    if left & right or not placed <= set(remaining):
        raise ValueError("placement blocks must be disjoint subsets of the remaining parties")
    if not placed or placed == set(remaining):
        return None
    for ranking in election.rankings:
        first_placed = last_unplaced = None
        for c in ranking:
            p = party_of[c]
            if p not in remaining:
                continue
            if p in placed:
                if first_placed is None:
                    first_placed = c
            elif first_placed is not None:
                last_unplaced = c
        if last_unplaced is None:
            continue
        pa, pb = party_of[last_unplaced], party_of[first_placed]
        return (pa, "left") if pb in right else (pa, "right")
    return None


def recognize_pasp(election: Election) -> Optional[tuple]:
    """A party axis witnessing PASP, or None if the profile is not PASP.

    Runs in O(|C| * |V| * |P|).  The returned axis is canonical (see
    :func:`canonical_axis`).
    """
    k = election.n_parties
    if election.n_voters == 0:
        return tuple(range(k))
    remaining = set(range(k))
    outer_left, outer_right = [], []
    while len(remaining) > 2:
        bottom = sorted(bottom_parties(election, remaining))
        if len(bottom) > 2:
            return None
        left, right = [bottom[0]], bottom[1:]
        while len(left) + len(right) < len(remaining):
            step = vote_imposed_extension(election, ExtremalPlacement(tuple(left), tuple(right)), remaining)
            if step is None:
                break
            party, side = step
            if side == "left":
                left.append(party)
            else:
                right.insert(0, party)
        outer_left.extend(left)
        outer_right[:0] = right
        remaining -= set(left) | set(right)
    axis = tuple(outer_left + sorted(remaining) + outer_right)
    if not verify_profile_under_axis(election, axis):
        return None
    return canonical_axis(axis)
