"""Construct and certify string C-group representations of permutation groups."""

from .classify import GroupType, classify
from .constructions import (
    PreconditionError,
    TailSpec,
    check_tail_hypotheses,
    comix_order,
    covers,
    dual_rank_reduce,
    mix,
    mix_with_facet,
    rank_reduce,
    sesqui_extension,
    strip_tail,
    tail_extend,
)
from .families import (
    FAMILIES,
    SEEDS,
    DomainError,
    TranscriptionMissingError,
    build,
    expected,
    seed_base,
    seed_extended,
    three_cycle_witness,
)
from .group import EngineConfig, PermutationGroup, ResourceLimitError, intersect
from .perm import Permutation
from .sggi import CprGraph, GraphError, Sggi, isomorphic
from .verify import VerificationReport, verify, verify_brute

__version__ = "0.1.0"
