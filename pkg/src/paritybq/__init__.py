"""Parity biquandle counting and cocycle invariants of virtual knots."""
from .algebra import (
    AxiomViolation,
    Biquandle,
    ConstraintViolated,
    NonUnit,
    OutOfRange,
    ParityBiquandle,
    alexander_biquandle,
    alexander_parity_biquandle,
    biquandle_from_matrix,
    duplicate,
    parity_biquandle_from_matrix,
    verify_biquandle_axioms,
    verify_parity_axioms,
)
from .cocycle import (
    CocyclePair,
    Tier,
    WeightPolynomial,
    boltzmann_weight,
    coboundary_1,
    invariant_polynomial,
    is_cocycle,
    is_compatible,
    is_reduced,
    is_strongly_compatible,
    polynomial_to_string,
    strong_boltzmann_weight,
    strong_invariant_polynomial,
)
from .coloring import Coloring, counting_invariant, enumerate_colorings
from .gauss import (
    GaussDiagram,
    crossing_parity,
    odd_writhe,
    parse_gauss_code,
    r1_insert,
    r2_insert,
    rotate,
)
from .search import build_constraint_system, enumerate_cocycles, solve_mod_m

__version__ = "0.1.0"
