"""Pure Nash equilibria of the nomination game on PASP profiles.

Every voter of a PASP profile only ever votes for one party (loyal voters)
or for one of two adjacent parties on the axis (swing voters).  Scores of a
nominee therefore depend on its two axis neighbours only, which makes a
dynamic program over the axis possible.

Two tables live here.  :func:`compute_viable_tables` fills the pairwise
viable-score tables (left-feasible partial schemes whose non-final nominees
stay at or below the target score and cannot reach it by switching).
:func:`equilibrium_president` uses a sharper left-to-right state that also
tracks the neighbours' post-switch scores, because a switch can win below
the target score (by taking votes from the distinguished nominee) or fail
to win above it (when a neighbour gains more).
"""

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional

from .core import Election, ElectionError, InvariantViolation, NotPASPError, is_nash_equilibrium, party_scores
from .recognition import recognize_pasp, verify_profile_under_axis


class VoterPartition(NamedTuple):
    """Loyal voters per party and swing voters per adjacent axis pair (voter indices)."""

    axis: tuple
    loyal: dict
    swing: dict


def two_possible_parties(vote, axis, election: Election):
    """The party of the vote's top choice and, unless the voter is loyal, the adjacent party it may defect to."""
    party_of = election.party_of_index
    ranking = [election.index[c] for c in vote]
    top = party_of[ranking[0]]
    size = len(election.members[top])
    other = next((c for c in ranking[:size] if party_of[c] != top), None)
    if other is None:
        return top, None
    b = party_of[other]
    axis = tuple(axis)
    if abs(axis.index(top) - axis.index(b)) != 1:
        raise NotPASPError(
            f"profile not PASP under axis: vote {vote!r} mixes non-adjacent parties "
            f"{election.party_names[top]} and {election.party_names[b]}"
        )
    return top, b


def partition_voters(election: Election, axis) -> VoterPartition:
    axis = tuple(axis)
    loyal = {p: [] for p in axis}
    swing = {(axis[i], axis[i + 1]): [] for i in range(len(axis) - 1)}
    rank_of = {p: i for i, p in enumerate(axis)}
    for v, vote in enumerate(election.votes):
        a, b = two_possible_parties(vote, axis, election)
        if b is None:
            loyal[a].append(v)
        else:
            key = (a, b) if rank_of[a] < rank_of[b] else (b, a)
            swing[key].append(v)
    return VoterPartition(axis, {p: tuple(vs) for p, vs in loyal.items()}, {k: tuple(vs) for k, vs in swing.items()})


class _Chain:
    """Parties in axis order with loyal counts and pairwise swing counts.

    ``beats[i][(x, y)]`` counts swing voters between axis positions i and
    i+1 that rank ``x`` (of party i) above ``y`` (of party i+1).
    """

    def __init__(self, members, loyal, swing, beats):
        self.members = members
        self.loyal = loyal
        self.swing = swing
        self.beats = beats

    @classmethod
    def build(cls, election, partition):
        axis = partition.axis
        members = [election.members[p] for p in axis]
        loyal = [len(partition.loyal[p]) for p in axis]
        swing, beats = [], []
        for i in range(len(axis) - 1):
            voters = partition.swing[(axis[i], axis[i + 1])]
            swing.append(len(voters))
            table = {}
            for x in members[i]:
                for y in members[i + 1]:
                    table[x, y] = sum(1 for v in voters if election.positions[v][x] < election.positions[v][y])
            beats.append(table)
        return cls(members, loyal, swing, beats)

    def reversed(self):
        k = len(self.members)
        beats = []
        for j in range(k - 2, -1, -1):
            beats.append({(y, x): self.swing[j] - cnt for (x, y), cnt in self.beats[j].items()})
        return _Chain(self.members[::-1], self.loyal[::-1], self.swing[::-1], beats)

    def left_in(self, i, c, prev):
        """Votes ``c`` (axis position i) takes from the swing voters shared with ``prev`` on its left."""
        if i == 0:
            return 0
        return self.swing[i - 1] - self.beats[i - 1][prev, c]

    def right_in(self, i, c, nxt):
        if i == len(self.members) - 1:
            return 0
        return self.beats[i][c, nxt]


def _axis_for(election, axis):
    if axis is None:
        axis = recognize_pasp(election)
        if axis is None:
            raise NotPASPError("profile is not party-aligned single-peaked")
    else:
        axis = tuple(axis)
        if not verify_profile_under_axis(election, axis):
            raise NotPASPError(f"profile is not PASP under axis {axis}")
    return axis


# --- pairwise viable-score tables -------------------------------------------


@dataclass(frozen=True)
class ViableScoreTable:
    """Viable score pairs for the distinguished axis position ``kappa`` and target ``s_star``.

    ``left[i][(c_prev, c)]`` is the set of pairs ``(s_prev, s)`` (both at
    most ``s_star``) viable for the candidate pair at axis positions
    ``i - 1`` and ``i``, for ``1 <= i <= kappa``.  ``right`` is the same
    table computed on the reversed axis (so its position ``i`` is axis
    position ``k - 1 - i``, and pairs are listed right-to-left).
    """

    s_star: int
    kappa: int
    left: dict
    right: dict


def _pair_table(chain, kappa, s_star):
    loyal = chain.loyal
    table = {}
    if kappa >= 1:
        level = {}
        for c0 in chain.members[0]:
            for c1 in chain.members[1]:
                s0 = loyal[0] + chain.right_in(0, c0, c1)
                s1 = loyal[1] + chain.left_in(1, c1, c0)
                if s0 > s_star or s1 > s_star:
                    continue
                if s0 == s_star or all(loyal[0] + chain.right_in(0, alt, c1) < s_star for alt in chain.members[0]):
                    level[c0, c1] = {(s0, s1)}
        table[1] = level
    for i in range(2, kappa + 1):
        prev_level = table[i - 1]
        level = {}
        for (c2, c1), pairs in prev_level.items():
            for c in chain.members[i]:
                bonus = chain.right_in(i - 1, c1, c)
                s = loyal[i] + chain.left_in(i, c, c1)
                if s > s_star:
                    continue
                blocked = None
                for _s2, s1_partial in pairs:
                    s1 = s1_partial + bonus
                    if s1 > s_star:
                        continue
                    if s1 < s_star:
                        if blocked is None:
                            blocked = any(
                                chain.right_in(i - 1, alt, c) + loyal[i - 1] + chain.left_in(i - 1, alt, c2) >= s_star
                                for alt in chain.members[i - 1]
                            )
                        if blocked:
                            continue
                    level.setdefault((c1, c), set()).add((s1, s))
        table[i] = level
    return table


def compute_viable_tables(election: Election, axis, partition: VoterPartition, kappa, s_star) -> ViableScoreTable:
    """Viable score pairs on both sides of axis position ``kappa`` for target score ``s_star``.

    Keys are candidate ids.  Base level: the pair of the first two parties
    is fully determined by their swing voters and is viable iff the first
    nominee scores exactly ``s_star``, or below it with no party member able
    to reach ``s_star`` against the second nominee.  Each further level
    extends a viable pair by one party and requires the same no-reach
    condition for the now-final middle nominee.
    """
    if not 0 <= s_star <= election.n_voters:
        raise ValueError("s_star must lie in [0, |V|]")
    chain = _Chain.build(election, partition)
    k = len(chain.members)
    if not 0 <= kappa < k:
        raise ValueError("kappa must be an axis position")
    name = election.candidates

    def named(table):
        return {
            i: {(name[a], name[b]): frozenset(pairs) for (a, b), pairs in level.items()}
            for i, level in table.items()
        }

    left = named(_pair_table(chain, kappa, s_star))
    right = named(_pair_table(chain.reversed(), k - 1 - kappa, s_star))
    return ViableScoreTable(s_star, kappa, left, right)


# --- exact equilibrium dynamic program ---------------------------------------


def _switch_need(chain, f, prev, cur, nxt, l_prev, s_star):
    """Least score the right neighbour must collect from its own right side
    so that no member of the (losing) party at position f can switch and win.
    The distinguished nominee is at least two positions away, so a winning
    switch needs ``s_star`` votes."""
    need = 0
    for alt in chain.members[f]:
        if alt == cur:
            continue
        gain_right = chain.right_in(f, alt, nxt)
        d = chain.loyal[f] + (chain.left_in(f, alt, prev) if prev is not None else 0) + gain_right
        if d < s_star:
            continue
        if prev is not None and d < l_prev + chain.right_in(f - 1, prev, alt):
            continue
        # right neighbour ends with R + (swing - gain_right); the switch wins iff d reaches that
        need = max(need, d - chain.swing[f] + gain_right + 1)
    return need


def _switch_threshold(chain, f, prev, cur, nxt, l_prev, far, s_star):
    """Best score a member of the party just left of the distinguished one can
    reach by switching while beating every score it can see; -1 if none.
    The switch wins iff this also reaches the best score right of the
    distinguished party."""
    kappa_left = chain.left_in(f + 1, nxt, cur)
    r_kappa = s_star - kappa_left
    best = -1
    for alt in chain.members[f]:
        if alt == cur:
            continue
        gain_right = chain.right_in(f, alt, nxt)
        d = chain.loyal[f] + (chain.left_in(f, alt, prev) if prev is not None else 0) + gain_right
        if d < far:
            continue
        if prev is not None and d < l_prev + chain.right_in(f - 1, prev, alt):
            continue
        if d < r_kappa + chain.swing[f] - gain_right:
            continue
        best = max(best, d)
    return best


def _side_states(chain, kappa, s_star, allowed):
    """Reachable ``(c_kappa, left_score, threshold, side_max)`` for axis positions 0..kappa.

    ``left_score`` is the nominee's score from voters left of and loyal to
    it, ``threshold`` is from :func:`_switch_threshold` and ``side_max`` is
    the best final score on this side.
    """
    loyal = chain.loyal
    if kappa == 0:
        return {(c, loyal[0], -1, -1) for c in allowed[0] if loyal[0] <= s_star}
    # (prev, cur, L(prev), need on R(cur), max final score up to prev's predecessor)
    states = {(None, c, 0, 0, -1) for c in allowed[0]}
    for f in range(kappa):
        last = f + 1 == kappa
        nxt_states = set()
        for prev, cur, l_prev, need, far in states:
            l_cur = loyal[f] + (chain.left_in(f, cur, prev) if prev is not None else 0)
            sc_prev = l_prev + chain.right_in(f - 1, prev, cur) if prev is not None else -1
            if l_cur > s_star:
                continue
            for nxt in allowed[f + 1]:
                r_cur = loyal[f] + chain.right_in(f, cur, nxt)
                if r_cur < need:
                    continue
                sc = l_cur + r_cur - loyal[f]
                if sc > s_star:
                    continue
                single = len(chain.members[f]) == 1 or sc == s_star
                if not last:
                    need2 = 0 if single else _switch_need(chain, f, prev, cur, nxt, l_prev, s_star)
                    nxt_states.add((cur, nxt, l_cur, need2, max(far, sc_prev)))
                else:
                    l_k = loyal[kappa] + chain.left_in(kappa, nxt, cur)
                    if l_k > s_star:
                        continue
                    tau = -1 if single else _switch_threshold(chain, f, prev, cur, nxt, l_prev, far, s_star)
                    nxt_states.add((nxt, l_k, tau, max(far, sc_prev, sc)))
        states = nxt_states
    return states


def _equilibrium_exists_at(chain, kappa, s_star, allowed):
    k = len(chain.members)
    left = _side_states(chain, kappa, s_star, allowed)
    if not left:
        return False
    right = {}
    for c, r, tau, side_max in _side_states(chain.reversed(), k - 1 - kappa, s_star, allowed[::-1]):
        right.setdefault((c, r), []).append((tau, side_max))
    loyal_k = chain.loyal[kappa]
    for c, l, tau_l, max_l in left:
        for tau_r, max_r in right.get((c, s_star - l + loyal_k), ()):
            if (tau_l < 0 or tau_l < max_r) and (tau_r < 0 or tau_r < max_l):
                return True
    return False


def _score_range(chain, kappa, n):
    lo = max(chain.loyal[kappa], -(-n // len(chain.members)))
    hi = chain.loyal[kappa] + (chain.swing[kappa - 1] if kappa > 0 else 0)
    hi += chain.swing[kappa] if kappa < len(chain.members) - 1 else 0
    return range(lo, min(hi, n) + 1)


def _lex_witness(election, axis, exists):
    """Lexicographically smallest scheme (party index order) accepted by ``exists(allowed)``."""
    allowed = {p: list(election.members[p]) for p in range(election.n_parties)}
    for p in range(election.n_parties):
        for c in election.members[p]:
            trial = dict(allowed)
            trial[p] = [c]
            if exists([trial[q] for q in axis]):
                allowed = trial
                break
        else:
            raise InvariantViolation("witness extraction lost feasibility")
    return tuple(election.candidates[allowed[p][0]] for p in range(election.n_parties))


def _check_witness(election, scheme, party, score, need_equilibrium):
    scores = party_scores(election, scheme)
    if scores[party] != score or score != max(scores):
        raise InvariantViolation(f"witness {scheme} does not make party {party} a winner with score {score}")
    if need_equilibrium and not is_nash_equilibrium(election, scheme):
        raise InvariantViolation(f"witness {scheme} is not a Nash equilibrium")


def equilibrium_president(election: Election, party, axis=None) -> Optional[tuple]:
    """A Nash equilibrium in which ``party`` wins, as ``(scheme, score)``, or None.

    Scores are tried in increasing order; the returned scheme is the
    lexicographically smallest equilibrium at the smallest feasible score.
    Raises :class:`NotPASPError` if the profile is not PASP.
    """
    party = election.party_index(party)
    axis = _axis_for(election, axis)
    chain = _Chain.build(election, partition_voters(election, axis))
    kappa = axis.index(party)
    full = list(chain.members)
    for s_star in _score_range(chain, kappa, election.n_voters):
        if _equilibrium_exists_at(chain, kappa, s_star, full):
            scheme = _lex_witness(election, axis, lambda allowed: _equilibrium_exists_at(chain, kappa, s_star, allowed))
            _check_witness(election, scheme, party, s_star, True)
            return scheme, s_star
    return None


def equilibrium_exists(election: Election, axis=None) -> Optional[tuple]:
    """Some pure Nash equilibrium scheme (trying parties in index order), or None."""
    axis = _axis_for(election, axis)
    for p in range(election.n_parties):
        found = equilibrium_president(election, p, axis)
        if found is not None:
            return found[0]
    return None


# --- centrist equilibria ------------------------------------------------------


def centrist_equilibrium(election: Election, candidate_axis) -> tuple:
    """A centrist Nash equilibrium for an SP profile with at most three contiguous parties.

    The leftmost party nominates its rightmost candidate and the rightmost
    party its leftmost one.  If some middle-party nominee wins in such a
    scheme, that scheme is returned; otherwise any centrist scheme is.
    """
    from .generators import is_single_peaked

    candidate_axis = tuple(candidate_axis)
    if sorted(candidate_axis) != sorted(election.candidates):
        raise ElectionError("candidate axis must list every candidate once")
    if election.n_parties > 3:
        raise ElectionError(f"centrist equilibria need at most 3 parties, got {election.n_parties}")
    order = []
    for c in candidate_axis:
        p = election.party_of(c)
        if not order or order[-1] != p:
            if p in order:
                raise ElectionError(f"party {election.party_names[p]} is not contiguous on the candidate axis")
            order.append(p)
    for v, vote in enumerate(election.votes):
        if not is_single_peaked(vote, candidate_axis):
            raise ElectionError(f"vote {v} is not single-peaked on the candidate axis")

    on_axis = {p: [c for c in candidate_axis if election.party_of(c) == p] for p in order}
    nominee = {order[0]: on_axis[order[0]][-1], order[-1]: on_axis[order[-1]][0]}
    middle = order[1:-1]
    choices = [on_axis[p] for p in middle]
    schemes = []
    for picks in product(*choices):
        chosen = {**nominee, **dict(zip(middle, picks))}
        schemes.append(tuple(chosen[p] for p in range(election.n_parties)))
    result = schemes[0]
    for scheme in schemes:
        scores = party_scores(election, scheme)
        if any(scores[p] == max(scores) for p in middle):
            result = scheme
            break
    if not is_nash_equilibrium(election, result):
        raise InvariantViolation(f"centrist scheme {result} is not a Nash equilibrium")
    return result
