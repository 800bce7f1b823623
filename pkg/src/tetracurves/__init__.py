"""Tetrahedral curves: reduction by basic double linkage, graded Betti
tables, componentwise linearity, regularity, and generic initial ideals,
cross-validated by independent monomial and Groebner oracles."""

__version__ = "0.1.0"

from .koszul import BettiTable, betti_table_oracle, reduced_homology_ranks, upper_koszul
from .monomials import (
    HilbertData,
    Monomial,
    MonomialIdeal,
    basic_double_link,
    component_ideal,
    hilbert_data,
    ideal_of_tuple,
    truncate,
)
from .resolution import (
    acm_linear_family,
    ascent_candidates,
    betti_table,
    ci_power_betti,
    classify,
    enumerate_linear_in_class,
    gin_betti_prediction,
    has_linear_resolution,
    minimal_curve_betti,
)
from .gin import (
    StableIdeal,
    ek_betti,
    gin_acm,
    gin_bdl_step,
    gin_buchsbaum_minimal,
    gin_of_curve,
    is_strongly_stable,
)
from .groebner import Polynomial4, generic_change, gin_oracle, groebner_basis
from .tuples import (
    ClassificationReport,
    ReductionStep,
    ReductionTrace,
    ReductionType,
    TetTuple,
    apply_reduction,
    canonicalize,
    ci_power_form,
    degree_of_tuple,
    facet_weights,
    is_cwl,
    is_minimal,
    max_weight_reduction,
    reduction_applicable,
    reduction_trace,
    regularity_closed_form,
    schwartau_status,
)

__all__ = [name for name in dir() if not name.startswith("_")]
