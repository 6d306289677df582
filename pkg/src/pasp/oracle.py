"""Exhaustive reference implementations.

Everything here evaluates definitions directly by enumeration, with no
pruning, and refuses (with :class:`CapExceededError`) to run past its cap.
Witness-returning oracles report the lexicographically first witness at the
smallest winning score, matching what the polynomial solvers return.
"""

import os
from itertools import permutations, product
from math import factorial, prod

from .core import CapExceededError, Election, _score_list
from .generators import is_single_peaked
from .recognition import canonical_axis, verify_profile_under_axis

DEFAULT_MAX_SCHEMES = 10**6
CAP_ENV = "PASP_MAX_SCHEMES"


def default_cap() -> int:
    """Scheme cap from the ``PASP_MAX_SCHEMES`` environment variable, else 10**6."""
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_MAX_SCHEMES


def _index_schemes(election, cap):
    cap = default_cap() if cap is None else cap
    total = prod(len(ms) for ms in election.members)
    if total > cap:
        raise CapExceededError(f"{total} nomination schemes exceed the cap of {cap}")
    return product(*election.members)


def enumerate_schemes(election: Election, cap=None):
    """Yield every nomination scheme once, lexicographically by party index then candidate order."""
    names = election.candidates
    for idx in _index_schemes(election, cap):
        yield tuple(names[c] for c in idx)


def _is_equilibrium(election, idx, scores):
    top = max(scores)
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
                return False
    return True


def _scan(election, cap, keep):
    """Lexicographically first scheme at the smallest score among those where ``keep`` holds.

    ``keep(idx, scores)`` returns the score to rank by, or None to reject.
    """
    best = None
    for idx in _index_schemes(election, cap):
        scores = _score_list(election, idx)
        s = keep(idx, scores)
        if s is not None and (best is None or s < best[1]):
            best = (tuple(election.candidates[c] for c in idx), s)
    return best


def brute_equilibria(election: Election, cap=None) -> list:
    """All pure Nash equilibria."""
    out = []
    for idx in _index_schemes(election, cap):
        if _is_equilibrium(election, idx, _score_list(election, idx)):
            out.append(tuple(election.candidates[c] for c in idx))
    return out


def brute_equilibrium_president(election: Election, party, cap=None):
    """``(scheme, score)`` of a Nash equilibrium where ``party`` wins, or None."""
    p = election.party_index(party)

    def keep(idx, scores):
        if scores[p] == max(scores) and _is_equilibrium(election, idx, scores):
            return scores[p]
        return None

    return _scan(election, cap, keep)


def brute_possible_president(election: Election, party, cap=None):
    """``(scheme, score)`` of a scheme where ``party`` wins, or None."""
    p = election.party_index(party)
    return _scan(election, cap, lambda idx, scores: scores[p] if scores[p] == max(scores) else None)


def brute_possible_president_excluding(election: Election, plus, minus, cap=None):
    """Scheme where ``plus`` wins and ``minus`` does not, or None."""
    p, q = election.party_index(plus), election.party_index(minus)

    def keep(idx, scores):
        top = max(scores)
        return scores[p] if scores[p] == top and scores[q] < top else None

    found = _scan(election, cap, keep)
    return None if found is None else found[0]


def brute_necessary_president(election: Election, party, cap=None) -> bool:
    """Whether ``party`` wins under every nomination scheme."""
    p = election.party_index(party)
    for idx in _index_schemes(election, cap):
        scores = _score_list(election, idx)
        if scores[p] != max(scores):
            return False
    return True


def brute_recognize_pasp(election: Election, max_parties=6):
    """First party permutation passing the per-vote check, canonicalized; None if there is none."""
    k = election.n_parties
    if k > max_parties:
        raise CapExceededError(f"{k} parties exceed the cap of {max_parties} for axis enumeration")
    for axis in permutations(range(k)):
        if verify_profile_under_axis(election, axis):
            return canonical_axis(axis)
    return None


def brute_vote_pasp(vote, axis, election: Election) -> bool:
    """PASP check of one vote straight from the definition: some perceived axis makes it single-peaked."""
    blocks = [list(permutations(election.parties[p])) for p in axis]
    for choice in product(*blocks):
        perceived = [c for block in choice for c in block]
        if is_single_peaked(list(vote), perceived):
            return True
    return False


def brute_single_peaked_axis(election: Election, cap=None):
    """A candidate axis on which every vote is single-peaked, or None."""
    cap = default_cap() if cap is None else cap
    if factorial(len(election.candidates)) > cap:
        raise CapExceededError(f"{len(election.candidates)}! candidate axes exceed the cap of {cap}")
    for axis in permutations(election.candidates):
        if all(is_single_peaked(v, axis) for v in election.votes):
            return axis
    return None


# --- partial-scheme oracles for the score tables -------------------------------


def _side_voters(election, axis, i):
    """Voters certain to vote for a party among the first ``i + 1`` on the axis, whatever the scheme."""
    inside = set(axis[: i + 1])
    out = []
    for v in range(election.n_voters):
        tops = set()
        for idx in product(*election.members):
            tops.add(election.party_of_index[min(idx, key=lambda c: election.positions[v][c])])
            if not tops <= inside:
                break
        if tops <= inside:
            out.append(v)
    return out


def _partial_votes(election, voters, nominees):
    """Votes each partial nominee gets from ``voters`` (who only vote among them)."""
    counts = [0] * len(nominees)
    for v in voters:
        pos = election.positions[v]
        counts[min(range(len(nominees)), key=lambda j: pos[nominees[j]])] += 1
    return counts


def _full_scores(election, axis, partial):
    """Scores in some completion of the axis-ordered partial scheme, in axis order."""
    idx = [election.members[p][0] for p in range(election.n_parties)]
    for p, c in zip(axis, partial):
        idx[p] = c
    scores = _score_list(election, idx)
    return [scores[p] for p in axis]


def brute_left_viable_pairs(election: Election, axis, kappa, s_star) -> dict:
    """Left-viable score pairs by enumerating partial schemes and testing feasibility directly.

    Returns ``{i: {(c_prev, c): {(s_prev, s), ...}}}`` for ``1 <= i <= kappa``,
    candidate ids as keys, scores restricted to ``[0, s_star]``.
    """
    axis = tuple(axis)
    names = election.candidates
    out = {}
    for i in range(1, kappa + 1):
        voters = _side_voters(election, axis, i)
        level = {}
        for partial in product(*(election.members[p] for p in axis[: i + 1])):
            full = _full_scores(election, axis, partial)
            ok = True
            for j in range(i):
                if full[j] > s_star:
                    ok = False
                    break
                if full[j] < s_star:
                    for alt in election.members[axis[j]]:
                        if alt == partial[j]:
                            continue
                        trial = list(partial)
                        trial[j] = alt
                        if _full_scores(election, axis, trial)[j] >= s_star:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                continue
            got = _partial_votes(election, voters, partial)
            if got[i - 1] <= s_star and got[i] <= s_star:
                level.setdefault((names[partial[i - 1]], names[partial[i]]), set()).add((got[i - 1], got[i]))
        out[i] = level
    return out


def brute_left_pp_scores(election: Election, axis, kappa, s_star, excluded=None) -> dict:
    """Left-PP-viable scores ``{i: {c: {s, ...}}}`` for ``0 <= i <= kappa``, scores in ``[0, s_star]``.

    Earlier nominees must end at or below ``s_star`` (strictly below for the
    ``excluded`` party, given by index).
    """
    axis = tuple(axis)
    names = election.candidates
    out = {}
    for i in range(kappa + 1):
        voters = _side_voters(election, axis, i)
        level = {}
        for partial in product(*(election.members[p] for p in axis[: i + 1])):
            full = _full_scores(election, axis, partial)
            if any(full[j] > s_star or (axis[j] == excluded and full[j] >= s_star) for j in range(i)):
                continue
            s = _partial_votes(election, voters, partial)[i]
            if s <= s_star:
                level.setdefault(names[partial[i]], set()).add(s)
        out[i] = level
    return out
