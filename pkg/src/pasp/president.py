"""Possible and necessary presidents on PASP profiles.

Only score caps matter here (no deviations), so a left-to-right pass that
keeps, per nominee, the votes it collects from voters on its left and
loyal to it is exact.
"""

from dataclasses import dataclass
from typing import Optional

from .core import Election, InvariantViolation, party_scores
from .equilibrium import _axis_for, _Chain, _lex_witness, _score_range, partition_voters


@dataclass(frozen=True)
class PPViableScoreTable:
    """Left- and right-PP-viable scores per axis position, for target ``s_star``.

    ``left[i][c]`` is the set of scores nominee ``c`` at axis position ``i``
    (``0 <= i <= kappa``) can collect from voters on its left and loyal to
    it while all earlier nominees finish at or below ``s_star`` (strictly
    below for the ``excluded`` party).  ``right`` is the same on the
    reversed axis.
    """

    s_star: int
    kappa: int
    excluded: Optional[int]
    left: dict
    right: dict


def _pp_levels(chain, kappa, s_star, allowed, excluded_pos=None):
    loyal = chain.loyal
    level = {c: {loyal[0]} for c in allowed[0] if loyal[0] <= s_star}
    levels = [level]
    for f in range(kappa):
        cap = s_star - 1 if f == excluded_pos else s_star
        nxt = {}
        for cur, scores in level.items():
            for c in allowed[f + 1]:
                gain = chain.right_in(f, cur, c)
                if min(scores) + gain > cap:
                    continue
                s = loyal[f + 1] + chain.left_in(f + 1, c, cur)
                if s <= s_star:
                    nxt.setdefault(c, set()).add(s)
        level = nxt
        levels.append(level)
    return levels


def compute_pp_tables(election: Election, axis, partition, kappa, s_star, excluded=None) -> PPViableScoreTable:
    """PP-viable score tables on both sides of axis position ``kappa``.

    ``excluded`` is a party index whose nominee must stay below ``s_star``.
    """
    if not 0 <= s_star <= election.n_voters:
        raise ValueError("s_star must lie in [0, |V|]")
    chain = _Chain.build(election, partition)
    axis = tuple(axis)
    k = len(axis)
    if not 0 <= kappa < k:
        raise ValueError("kappa must be an axis position")
    ex = axis.index(excluded) if excluded is not None else None
    full = list(chain.members)
    name = election.candidates

    def named(levels):
        return {i: {name[c]: frozenset(s) for c, s in lvl.items()} for i, lvl in enumerate(levels)}

    left = named(_pp_levels(chain, kappa, s_star, full, ex))
    right = named(_pp_levels(chain.reversed(), k - 1 - kappa, s_star, full[::-1], None if ex is None else k - 1 - ex))
    return PPViableScoreTable(s_star, kappa, excluded, left, right)


def _pp_exists(chain, kappa, s_star, allowed, ex):
    k = len(chain.members)
    left = _pp_levels(chain, kappa, s_star, allowed, ex)[-1]
    if not left:
        return False
    right = _pp_levels(chain.reversed(), k - 1 - kappa, s_star, allowed[::-1], None if ex is None else k - 1 - ex)[-1]
    loyal = chain.loyal[kappa]
    for c, ls in left.items():
        rs = right.get(c, ())
        if any(s_star - l + loyal in rs for l in ls):
            return True
    return False


def _possible(election, plus, minus, axis):
    p = election.party_index(plus)
    q = None if minus is None else election.party_index(minus)
    if p == q:
        raise ValueError("the winning and excluded parties must differ")
    axis = _axis_for(election, axis)
    chain = _Chain.build(election, partition_voters(election, axis))
    kappa = axis.index(p)
    ex = None if q is None else axis.index(q)
    full = list(chain.members)
    for s_star in _score_range(chain, kappa, election.n_voters):
        if _pp_exists(chain, kappa, s_star, full, ex):
            scheme = _lex_witness(election, axis, lambda allowed: _pp_exists(chain, kappa, s_star, allowed, ex))
            scores = party_scores(election, scheme)
            top = max(scores)
            if scores[p] != s_star or top != s_star or (q is not None and scores[q] == top):
                raise InvariantViolation(f"witness {scheme} does not realize the query at score {s_star}")
            return scheme, s_star
    return None


def possible_president(election: Election, party, axis=None):
    """``(scheme, score)`` with ``party`` a winner, or None.

    The scheme is the lexicographically smallest one at the smallest
    winning score.
    """
    return _possible(election, party, None, axis)


def possible_president_excluding(election: Election, plus, minus, axis=None):
    """A scheme in which ``plus`` wins and ``minus`` does not, or None."""
    found = _possible(election, plus, minus, axis)
    return None if found is None else found[0]


def necessary_president(election: Election, party, axis=None) -> bool:
    """Whether ``party`` wins under every nomination scheme."""
    p = election.party_index(party)
    axis = _axis_for(election, axis)
    return all(
        possible_president_excluding(election, other, p, axis) is None
        for other in range(election.n_parties)
        if other != p
    )
