from __future__ import annotations

__all__ = [
    "EXACT_CLASSES",
    "LATTICE",
    "PAIR_TABLE",
    "REPRESENTATIVES",
    "BasicFn",
    "NeighborhoodFn",
    "VerificationClass",
    "all_representatives",
    "canonicalize",
    "eval_basic",
    "exact_class",
    "find_verifiability_counterexample",
    "format_class",
    "gamma",
    "hierarchy_edges",
    "informativeness_oracle",
    "minimal_classes",
    "more_informative",
    "parse_neighborhood",
    "refutations",
    "representative",
    "verification_class",
]

from afverify.verification.classes import VerificationClass, format_class, verification_class
from afverify.verification.criteria import EXACT_CLASSES, exact_class, gamma
from afverify.verification.lattice import (
    LATTICE,
    all_representatives,
    hierarchy_edges,
    informativeness_oracle,
    more_informative,
)
from afverify.verification.neighborhood import (
    PAIR_TABLE,
    REPRESENTATIVES,
    BasicFn,
    NeighborhoodFn,
    canonicalize,
    eval_basic,
    parse_neighborhood,
    representative,
)
from afverify.verification.search import (
    find_verifiability_counterexample,
    minimal_classes,
    refutations,
)
