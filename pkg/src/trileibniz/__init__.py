"""Graded 3-Leibniz algebras over the rationals: identity checks, supports,
connections, ideals, decompositions and gr-simplicity analysis.
"""

from .algebra import TriAlgebra, check_fundamental_identity, from_binary_leibniz, is_3leibniz, opposite
from .analysis import full_report, grprime_probe, partition_support, simplicity_report
from .connections import connected, connection_classes, j_connected
from .errors import (
    LeibnizIdentityError,
    MalformedInput,
    PreconditionError,
    TheoremContradiction,
    TriLeibnizError,
)
from .grading import GradedAlgebra, check_grading_compat
from .groups import GroupElement, GroupSpec
from .ideals import annihilator, decompose, ideal_closure, j_literal, lie_annihilator, validate_j_candidate
from .linalg import Subspace, span

__version__ = "0.1.0"

__all__ = [
    "GradedAlgebra",
    "GroupElement",
    "GroupSpec",
    "LeibnizIdentityError",
    "MalformedInput",
    "PreconditionError",
    "Subspace",
    "TheoremContradiction",
    "TriAlgebra",
    "TriLeibnizError",
    "annihilator",
    "check_fundamental_identity",
    "check_grading_compat",
    "connected",
    "connection_classes",
    "decompose",
    "from_binary_leibniz",
    "full_report",
    "grprime_probe",
    "ideal_closure",
    "is_3leibniz",
    "j_connected",
    "j_literal",
    "lie_annihilator",
    "opposite",
    "partition_support",
    "simplicity_report",
    "span",
    "validate_j_candidate",
]
