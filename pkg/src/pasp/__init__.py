"""Strategic nomination under Plurality on party-aligned single-peaked profiles."""

from .core import (
    CapExceededError,
    Election,
    ElectionError,
    InvariantViolation,
    NotPASPError,
    build_election,
    is_nash_equilibrium,
    nash_deviations,
    party_scores,
    reduced_scores,
    winners,
    winning_parties,
)
from .equilibrium import (
    centrist_equilibrium,
    compute_viable_tables,
    equilibrium_exists,
    equilibrium_president,
    partition_voters,
    two_possible_parties,
)
from .generators import (
    EuclideanSpec,
    euclidean_election,
    is_single_peaked,
    paper_fixture,
    random_euclidean,
    random_pasp,
    random_profile,
    random_sp_pasp,
)
from .president import compute_pp_tables, necessary_president, possible_president, possible_president_excluding
from .profile_io import ProfileError, parse_profile, serialize_profile, serialize_report
from .recognition import recognize_pasp, verify_profile_under_axis, verify_vote_under_axis

__version__ = "0.1.0"
