"""Text profile format and result reports.

A profile document has one declaration per line; ``#`` starts a comment::

    counts 4 2 3          # candidates, parties, voters
    candidate a1 Alice    # id, optional display name
    candidate a2
    ...
    party A a1 a2         # id, members
    party B b1 b2
    a1 b1 a2 b2           # one vote, most preferred first
    2: b1 a2 b2 a1        # the same vote cast twice

The ``counts`` line comes first; candidates, then parties, then votes.
"""

import re

from .core import CapExceededError, Election, ElectionError, build_election, check_scheme, party_scores
from .oracle import enumerate_schemes

KEYWORDS = ("counts", "candidate", "party")
_TOKEN = re.compile(r"\S+")
_MULT = re.compile(r"^(\d+):$")


class ProfileError(ElectionError):
    """A problem in a profile document, located by 1-based line and column."""

    def __init__(self, line, column, message):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


def _check_id(tok, col, lineno, kind):
    if tok in KEYWORDS or tok.endswith(":") or "#" in tok:
        raise ProfileError(lineno, col, f"invalid {kind} id {tok!r}")


def parse_profile(text) -> Election:
    """Parse a profile document into a validated election."""
    counts = None
    candidates, labels, parties, votes = [], {}, {}, []
    owner = {}
    stage = 0  # 0: counts, 1: candidates, 2: parties, 3: votes
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        head, col = toks[0]
        if stage == 0:
            if head != "counts" or len(toks) != 4 or not all(t.isdigit() for t, _ in toks[1:]):
                raise ProfileError(lineno, col, "malformed count header; expected 'counts <candidates> <parties> <voters>'")
            counts = tuple(int(t) for t, _ in toks[1:])
            stage = 1
        elif head == "counts":
            raise ProfileError(lineno, col, "duplicate count header")
        elif head == "candidate":
            if stage > 1:
                raise ProfileError(lineno, col, "candidate declared after parties or votes")
            if len(toks) < 2:
                raise ProfileError(lineno, col + len(head), "candidate line needs an id")
            cid, ccol = toks[1]
            _check_id(cid, ccol, lineno, "candidate")
            if cid in labels:
                raise ProfileError(lineno, ccol, f"duplicate candidate id {cid!r}")
            candidates.append(cid)
            name = body[ccol - 1 + len(cid):].strip()
            labels[cid] = name or None
        elif head == "party":
            if stage > 2:
                raise ProfileError(lineno, col, "party declared after votes")
            stage = 2
            if len(toks) < 3:
                raise ProfileError(lineno, col, "party line needs an id and at least one member")
            pid, pcol = toks[1]
            _check_id(pid, pcol, lineno, "party")
            if pid in parties:
                raise ProfileError(lineno, pcol, f"duplicate party id {pid!r}")
            members = []
            for tok, tcol in toks[2:]:
                if tok not in labels:
                    raise ProfileError(lineno, tcol, f"unknown candidate id {tok!r}")
                if tok in owner:
                    raise ProfileError(lineno, tcol, f"party overlap: {tok!r} already belongs to party {owner[tok]!r}")
                owner[tok] = pid
                members.append(tok)
            parties[pid] = members
        else:
            stage = 3
            mult = 1
            m = _MULT.match(head)
            if m:
                mult = int(m.group(1))
                if mult < 1:
                    raise ProfileError(lineno, col, "multiplicity must be positive")
                toks = toks[1:]
            seen = set()
            for tok, tcol in toks:
                if tok not in labels:
                    raise ProfileError(lineno, tcol, f"unknown candidate id {tok!r}")
                if tok in seen:
                    raise ProfileError(lineno, tcol, f"duplicate in ranking: {tok!r}")
                seen.add(tok)
            if len(seen) != len(candidates):
                missing = [c for c in candidates if c not in seen]
                end = toks[-1][1] + len(toks[-1][0]) if toks else col
                raise ProfileError(lineno, end, f"missing candidate(s) {missing} in ranking")
            votes.extend([tuple(t for t, _ in toks)] * mult)
    if counts is None:
        raise ProfileError(last_line + 1, 1, "malformed count header; document has no 'counts' line")
    unowned = [c for c in candidates if c not in owner]
    if unowned:
        raise ProfileError(last_line + 1, 1, f"candidates not in any party: {unowned}")
    got = (len(candidates), len(parties), len(votes))
    if got != counts:
        raise ProfileError(1, 1, f"count header says {counts} but document has {got}")
    if not parties:
        raise ProfileError(last_line + 1, 1, "no parties declared")
    return build_election(candidates, parties, votes, labels={c: n for c, n in labels.items() if n})


def serialize_profile(election: Election) -> str:
    """Canonical text: declarations in election order, consecutive identical votes grouped."""
    lines = [f"counts {len(election.candidates)} {election.n_parties} {election.n_voters}"]
    for c in election.candidates:
        name = election.labels.get(c)
        lines.append(f"candidate {c} {name}" if name else f"candidate {c}")
    for pid, members in zip(election.party_names, election.parties):
        lines.append(f"party {pid} {' '.join(members)}")
    i = 0
    votes = election.votes
    while i < len(votes):
        j = i
        while j < len(votes) and votes[j] == votes[i]:
            j += 1
        prefix = f"{j - i}: " if j - i > 1 else ""
        lines.append(prefix + " ".join(votes[i]))
        i = j
    return "\n".join(lines) + "\n"


# --- reports ------------------------------------------------------------------

TABLE_LIMIT = 64


def score_table(election: Election, limit=TABLE_LIMIT):
    """``[(scheme, scores, winning party ids)]`` for every scheme, or None above ``limit`` schemes."""
    try:
        schemes = list(enumerate_schemes(election, cap=limit))
    except CapExceededError:
        return None
    rows = []
    for scheme in schemes:
        scores = party_scores(election, scheme)
        top = max(scores)
        rows.append((scheme, tuple(scores), tuple(election.party_names[p] for p, s in enumerate(scores) if s == top)))
    return rows


def make_report(election: Election, query, answer, party=None, witness=None, score=None, axis=None, oracle=None, table=True):
    """Collect a query result into an ordered report dictionary."""
    report = {"query": query}
    if party is not None:
        report["party"] = election.party_names[election.party_index(party)]
    report["answer"] = answer
    if witness is not None:
        report["witness"] = check_scheme(election, witness)
    if score is not None:
        report["score"] = score
    if axis is not None:
        report["axis"] = tuple(election.party_names[p] for p in axis)
    if oracle is not None:
        report["oracle"] = oracle
    if table:
        rows = score_table(election)
        if rows is not None:
            report["table"] = rows
    return report


def serialize_report(report, fmt="text") -> str:
    """Render a report as readable text or as ``key=value`` records."""
    if fmt not in ("text", "structured"):
        raise ValueError(f"unknown report format {fmt!r}")
    lines = []
    for key, value in report.items():
        if key == "table":
            continue
        if fmt == "structured":
            if isinstance(value, tuple):
                value = ",".join(map(str, value))
            lines.append(f"{key}={value}")
        else:
            if key == "axis":
                value = " < ".join(value)
            elif isinstance(value, tuple):
                value = " ".join(value)
            lines.append(f"{key}: {value}")
    rows = report.get("table")
    if rows:
        if fmt == "text":
            lines.append("schemes:")
        for scheme, scores, won in rows:
            if fmt == "structured":
                lines.append(f"scheme={','.join(scheme)} scores={','.join(map(str, scores))} winners={','.join(won)}")
            else:
                lines.append(f"  {' '.join(scheme)} | {' '.join(map(str, scores))} | winners {' '.join(won)}")
    return "\n".join(lines) + "\n"
