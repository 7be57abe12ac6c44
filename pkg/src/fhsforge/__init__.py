"""fhsforge: optimal frequency-hopping sequence sets from MDS cyclic codes,
verified against the Peng-Fan, Singleton and sphere-packing bounds."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    optimality_report,
    peng_fan_1,
    peng_fan_2,
    pf_identity_sweep,
    singleton_max_size,
    sphere_packing_max_size,
)
from .constructions import (
    FamilyBuild,
    FamilyParams,
    family_a,
    family_b,
    family_c,
    family_ding,
    largest_bad_m,
)
from .cyclic import (
    CyclicCode,
    CyclotomicCoset,
    EquivalenceClass,
    build_code,
    class_partition,
    cyclotomic_cosets,
    enumerate_classes,
    factor_x_pow_n_minus_one,
    has_full_orbits_nonzero,
    has_full_orbits_outside_constants,
    min_distance_exhaustive,
    small_period_witness,
    unit_coset_code,
)
from .fhs import (
    CorrelationSurvey,
    FhsSet,
    auto_peak,
    classes_to_fhs,
    correlation,
    cross_peak,
    max_nontrivial,
    sampled_correlation_bound,
)
from .galois import (
    FiniteField,
    Polynomial,
    field_from_order,
    is_irreducible,
    make_field,
    poly_gcd,
    pow_mod,
)
from .intmath import smallest_prime_factor

__all__ = [
    "BoundReport",
    "CorrelationSurvey",
    "CyclicCode",
    "CyclotomicCoset",
    "EquivalenceClass",
    "FamilyBuild",
    "FamilyParams",
    "FhsSet",
    "FiniteField",
    "Polynomial",
    "auto_peak",
    "build_code",
    "class_partition",
    "classes_to_fhs",
    "correlation",
    "cross_peak",
    "cyclotomic_cosets",
    "enumerate_classes",
    "factor_x_pow_n_minus_one",
    "family_a",
    "family_b",
    "family_c",
    "family_ding",
    "field_from_order",
    "has_full_orbits_nonzero",
    "has_full_orbits_outside_constants",
    "is_irreducible",
    "largest_bad_m",
    "make_field",
    "max_nontrivial",
    "min_distance_exhaustive",
    "optimality_report",
    "peng_fan_1",
    "peng_fan_2",
    "pf_identity_sweep",
    "poly_gcd",
    "pow_mod",
    "sampled_correlation_bound",
    "singleton_max_size",
    "small_period_witness",
    "smallest_prime_factor",
    "sphere_packing_max_size",
    "unit_coset_code",
    "__version__",
]
