"""Enumeration and verification of square-free monomial Cremona transformations."""

from .birational import (
    CremonaVerdict,
    DegreeTwoKind,
    DegreeTwoShape,
    classify_degree_two,
    cycle_determinant,
    exact_determinant,
    is_cremona,
    quadratic_graph_sets,
    standard_involution,
)
from .census import (
    CensusQuery,
    CensusReport,
    census,
    classify_type_n6_d3,
    cross_check_duality,
    verify_gcd_lemma,
)
from .core import (
    Clutter,
    LogMatrix,
    Monomial,
    MonomialSet,
    ParseError,
    from_clutter,
    incidence_profile,
    is_cohesive,
    log_matrix,
    parse_monomial_set,
    satisfies_canonical_restrictions,
    to_clutter,
)
from .oracle import brute_force_oracle
from .reductions import (
    ReductionCertificate,
    ReductionStep,
    delete_leaf,
    dual_complement,
    pluck_root,
    reduce_to_base,
)
from .symmetry import (
    CanonicalForm,
    Permutation,
    act,
    canonical_form,
    extend_orbits,
    maximal_cones,
    stabilizer,
)

__version__ = "0.1.0"
