"""Exact monomial-ideal toolkit for the initial ideal of the generic link
of maximal minors: grid monomials, term orders, ideal arithmetic, symbolic
powers, the combinatorial link model, and verification harnesses."""

from .ideals import (
    MonomialIdeal,
    NotSquarefree,
    SizeGuardExceeded,
    UniverseMismatch,
    coprime_generator_witness,
    first_symbolic_gap,
    ideal,
    square_colon_check,
    square_colon_scan,
    unit_ideal,
    zero_ideal,
)
from .linkage import (
    BettiTable,
    LinkInstance,
    OddPartReduction,
    SquareDivisorWitness,
    antidiagonal_divisor,
    betti_table,
    chain_exponent,
    chain_normal_form,
    join,
    leq,
    meet,
    odd_part_reduction,
    resolution_ranks,
    side_of,
    square_divisor,
    staircase_power_conditions,
    straighten_holds,
)
from .monomial import Monomial, Universe, Variable, parse_variable, xvar, yvar
from .orders import DiagLexOrder, GradedRevLex
from .verify import Report, VerifyBounds, run_suite

__all__ = [
    "BettiTable",
    "DiagLexOrder",
    "GradedRevLex",
    "LinkInstance",
    "Monomial",
    "MonomialIdeal",
    "NotSquarefree",
    "OddPartReduction",
    "Report",
    "SizeGuardExceeded",
    "SquareDivisorWitness",
    "Universe",
    "UniverseMismatch",
    "Variable",
    "VerifyBounds",
    "antidiagonal_divisor",
    "betti_table",
    "chain_exponent",
    "chain_normal_form",
    "coprime_generator_witness",
    "first_symbolic_gap",
    "ideal",
    "join",
    "leq",
    "meet",
    "odd_part_reduction",
    "parse_variable",
    "resolution_ranks",
    "run_suite",
    "side_of",
    "square_colon_check",
    "square_colon_scan",
    "square_divisor",
    "staircase_power_conditions",
    "straighten_holds",
    "unit_ideal",
    "xvar",
    "yvar",
    "zero_ideal",
]
