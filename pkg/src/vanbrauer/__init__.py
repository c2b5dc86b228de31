"""Exact lattice computations for vanishing Brauer classes of K3 double planes."""

from .cubic import case_report, picard_lattice, build_glued_ambient, inverse_lookup, admissible
from .intlin import Matrix, det, hnf, snf, kernel_basis, solve_integral
from .k3brauer import BField, BrauerKind, K3Ambient, classify_from_pic
from .lattice import Lattice, Sublattice, glue, saturation, signature

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "det",
    "hnf",
    "snf",
    "kernel_basis",
    "solve_integral",
    "Lattice",
    "Sublattice",
    "glue",
    "saturation",
    "signature",
    "BField",
    "BrauerKind",
    "K3Ambient",
    "classify_from_pic",
    "case_report",
    "picard_lattice",
    "build_glued_ambient",
    "inverse_lookup",
    "admissible",
]
