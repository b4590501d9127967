"""Cyclotomic numerical semigroups: semigroup polynomials, polynomial length,
gluings and complete intersections, and an exhaustive census by Frobenius
number."""

__version__ = "0.1.0"

from .arith import divisor_count, divisors, factorize, mobius, totient
from .cyclotomy import (
    CycloFactorization,
    ExponentSequence,
    cyclotomic_factorization,
    exponent_sequence_exact,
    exponent_sequence_truncated,
    hilbert_numerator_truncated,
    is_cyclotomic,
    polynomial_length,
    semigroup_polynomial,
)
from .enumeration import (
    CensusReport,
    cyclotomic_census,
    enumerate_all_with_frobenius,
    enumerate_symmetric_with_frobenius,
    verify_conjectures,
)
from .errors import CoefficientOverflowError, DomainError, GapSetError
from .polynomials import IntPoly, cyclotomic, is_palindromic, poly_compose_power, poly_divmod, poly_mul
from .semigroup import (
    NumericalSemigroup,
    apery_set,
    betti_elements,
    factorizations,
    from_gap_set,
    from_generators,
    is_symmetric,
    minimal_presentation_size,
)
from .structure import (
    Classification,
    Gluing,
    Leaf,
    Node,
    build_family_Sek,
    classify_low_length,
    detect_gluings,
    is_complete_intersection,
)


