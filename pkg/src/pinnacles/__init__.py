"""Admissible pinnacle sets and pinnacle orderings of permutations."""

from .core import (
    InadmissibleOrderingError,
    InadmissibleSetError,
    InterruptionRecord,
    InterruptionReport,
    Permutation,
    PinnacleError,
    PinnacleOrdering,
    PinnacleSet,
    SlackEntry,
    SlackProfile,
    construct_witness,
    count_admissible_orderings,
    enumerate_admissible_orderings,
    interruption_count,
    interruption_report,
    is_admissible_ordering,
    is_admissible_ordering_reduced,
    is_admissible_set,
    is_admissible_set_recursive,
    is_maximally_admissible,
    k_profile,
    pinnacles_of,
    reduced_check_elements,
    vales_of,
)
from .oracle import (
    OracleScan,
    VerificationError,
    VerificationReport,
    dump_csv,
    oracle_admissible_sets,
    oracle_orderings,
    scan,
    verify_against_core,
)

__version__ = "0.1.0"
