"""Blowup algebras (Rees algebra, associated graded ring, fiber cone) of monomial
and numerical-semigroup ideals, with exact invariants and theorem checkers."""
from .blowup import (
    PresentedAlgebra,
    analytic_spread,
    check_pro9,
    cm_check_F,
    fiber_presentation,
    graded_presentation_and_reltype,
    hilbert,
    reduction_number,
    reduction_suite,
    rees_ideal,
    vv_check_G,
)
from .config import Config
from .groebner import GroebnerIdeal, buchberger
from .homology import BettiTable, derived_invariants, free_resolution
from .monomial import LocalMonomialIdeal, LocalRing
from .poly import GF, QQ, Polynomial, PolynomialRing
from .semigroup import NumericalSemigroup, SemigroupIdeal, sg_new
from .theorems import VerdictReport, canonical_checks, e0_compare, gor_char_verify, thm7_check

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "Config", "GF", "GroebnerIdeal", "LocalMonomialIdeal", "LocalRing", "NumericalSemigroup",
    "Polynomial", "PolynomialRing", "PresentedAlgebra", "QQ", "SemigroupIdeal", "VerdictReport",
    "analytic_spread", "buchberger", "canonical_checks", "check_pro9", "cm_check_F", "derived_invariants",
    "e0_compare", "fiber_presentation", "free_resolution", "gor_char_verify", "graded_presentation_and_reltype",
    "hilbert", "reduction_number", "reduction_suite", "rees_ideal", "sg_new", "thm7_check", "vv_check_G",
]
