"""Command-line interface.

Exit codes: 0 answered (yes / found), 1 answered no / none, 2 input error,
3 scheme cap exceeded, 4 internal invariant violation.
"""

import argparse
import sys

from . import oracle
from .core import CapExceededError, ElectionError, InvariantViolation, NotPASPError
from .equilibrium import equilibrium_exists, equilibrium_president
from .generators import FIXTURES, paper_fixture, random_euclidean, random_pasp, random_sp_pasp
from .president import necessary_president, possible_president
from .profile_io import make_report, parse_profile, serialize_profile, serialize_report
from .recognition import recognize_pasp

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3, 4
QUERIES = ("recognize", "equilibrium", "possible", "necessary")


def _io_flags(p, with_input=True):
    if with_input:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--input", "-i", default="-", help="profile file ('-' for stdin)")
        src.add_argument("--fixture", choices=sorted(FIXTURES), help="use a built-in fixture as input")
    p.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--max-schemes", type=int, default=None, help=f"scheme cap for exhaustive search (env {oracle.CAP_ENV})")


def build_parser():
    parser = argparse.ArgumentParser(prog="pasp", description="Nomination equilibria and presidents on PASP profiles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="find a party axis")
    _io_flags(p)
    p = sub.add_parser("equilibrium", help="Nash equilibrium (won by --party, if given)")
    p.add_argument("--party")
    _io_flags(p)
    for name in ("possible", "necessary"):
        p = sub.add_parser(name, help=f"{name} president query")
        p.add_argument("--party", required=True)
        _io_flags(p)
    p = sub.add_parser("brute", help="answer a query by exhaustive search")
    p.add_argument("query", choices=QUERIES)
    p.add_argument("--party")
    _io_flags(p)
    p = sub.add_parser("generate", help="write a generated profile")
    p.add_argument("kind", choices=("pasp", "sp-pasp", "euclidean", "fixture"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default="2,2,2", help="comma-separated party sizes")
    p.add_argument("--voters", type=int, default=10)
    p.add_argument("--name", choices=sorted(FIXTURES), help="fixture name (kind 'fixture')")
    _io_flags(p, with_input=False)
    p = sub.add_parser("check", help="run solvers and oracles and compare")
    p.add_argument("--cross-validate", action="store_true", help="compare every query against the oracle (default)")
    _io_flags(p)
    return parser


def _load(args):
    if args.fixture:
        return paper_fixture(args.fixture)
    if args.input == "-":
        return parse_profile(sys.stdin.read())
    try:
        with open(args.input, encoding="utf-8") as fh:
            return parse_profile(fh.read())
    except OSError as exc:
        raise ElectionError(f"cannot read {args.input}: {exc.strerror}") from None


def _emit(args, text):
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _require_party(election, args):
    if getattr(args, "party", None) is None:
        raise ElectionError("this query needs --party")
    return election.party_index(int(args.party) if args.party.isdigit() and args.party not in election.party_names else args.party)


def _solve(election, query, party, axis):
    """Answer with the polynomial solvers: ``(found, witness, score)``."""
    if query == "recognize":
        return axis is not None, None, None
    if axis is None:
        raise NotPASPError("profile is not party-aligned single-peaked; try 'brute'")
    if query == "equilibrium":
        if party is None:
            scheme = equilibrium_exists(election, axis)
            return scheme is not None, scheme, None
        found = equilibrium_president(election, party, axis)
    elif query == "possible":
        found = possible_president(election, party, axis)
    else:
        return necessary_president(election, party, axis), None, None
    return (found is not None, *(found or (None, None)))


def _brute(election, query, party, cap):
    if query == "recognize":
        axis = oracle.brute_recognize_pasp(election)
        return axis is not None, None, None, axis
    if query == "equilibrium":
        if party is None:
            eqs = oracle.brute_equilibria(election, cap)
            return bool(eqs), (eqs[0] if eqs else None), None, None
        found = oracle.brute_equilibrium_president(election, party, cap)
    elif query == "possible":
        found = oracle.brute_possible_president(election, party, cap)
    else:
        return oracle.brute_necessary_president(election, party, cap), None, None, None
    return found is not None, *(found or (None, None)), None


def _answer(query, found, party):
    if query in ("recognize", "necessary") or (query == "possible" and party is not None):
        return "yes" if found else "no"
    return "found" if found else "none"


def _run_query(args, election):
    query = args.command
    party = _require_party(election, args) if (query in ("possible", "necessary") or getattr(args, "party", None)) else None
    axis = recognize_pasp(election)
    found, witness, score = _solve(election, query, party, axis)
    report = make_report(election, query, _answer(query, found, party), party, witness, score, axis)
    _emit(args, serialize_report(report, args.format))
    return EXIT_YES if found else EXIT_NO


def _run_brute(args, election):
    query = args.query
    party = _require_party(election, args) if (query in ("possible", "necessary") or getattr(args, "party", None)) else None
    found, witness, score, axis = _brute(election, query, party, args.max_schemes)
    report = make_report(election, f"brute {query}", _answer(query, found, party), party, witness, score, axis)
    _emit(args, serialize_report(report, args.format))
    return EXIT_YES if found else EXIT_NO


def _run_generate(args):
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if args.kind == "fixture":
        if not args.name:
            raise ElectionError("generate fixture needs --name")
        election = paper_fixture(args.name)
    elif args.kind == "pasp":
        election = random_pasp(args.seed, sizes, args.voters)[0]
    elif args.kind == "sp-pasp":
        election = random_sp_pasp(args.seed, sizes, args.voters)[0]
    else:
        election = random_euclidean(args.seed, sizes, args.voters)
    _emit(args, serialize_profile(election))
    return EXIT_YES


def cross_validate(election, cap=None):
    """Compare every solver query with its oracle; returns a list of mismatch descriptions."""
    problems = []
    axis = recognize_pasp(election)
    if (axis is not None) != (oracle.brute_recognize_pasp(election) is not None):
        problems.append("recognize")
    if axis is None:
        return problems
    for p in range(election.n_parties):
        name = election.party_names[p]
        for query in ("equilibrium", "possible", "necessary"):
            got = _solve(election, query, p, axis)
            want = _brute(election, query, p, cap)[:3]
            if got != want:
                problems.append(f"{query} {name}: solver {got} oracle {want}")
    return problems


def _run_check(args, election):
    problems = cross_validate(election, args.max_schemes)
    report = make_report(election, "check", "agree" if not problems else "disagree", axis=recognize_pasp(election), oracle="; ".join(problems) or "agree")
    _emit(args, serialize_report(report, args.format))
    return EXIT_YES if not problems else EXIT_INVARIANT


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return _run_generate(args)
        election = _load(args)
        if args.command == "brute":
            return _run_brute(args, election)
        if args.command == "check":
            return _run_check(args, election)
        return _run_query(args, election)
    except CapExceededError as exc:
        print(f"pasp: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as exc:
        print(f"pasp: internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ElectionError, NotPASPError, ValueError) as exc:
        print(f"pasp: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
