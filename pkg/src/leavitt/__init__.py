"""Exact computation in Leavitt algebras and their matrix rings.

The package constructs generator sets realizing M_d(L_n) = L_n whenever
gcd(d, n-1) = 1, verifies them symbolically (defining relations, replayable
generation certificates, bounded span closure), and classifies matrix rings
over Leavitt algebras by their K0 data and graded structure.
"""

from .algebra import Element, Monomial, degree_zero_image, reduce_terms, reduce_word
from .certify import (
    Certificate,
    CertificateError,
    CertificateReport,
    ClosureResult,
    RelationReport,
    check_dagger,
    check_relations,
    default_targets,
    evaluate_certificate,
    generation_certificate,
    span_closure_verify,
)
from .classify import (
    K0Class,
    classification_report,
    degree_one_generating_set_possible,
    graded_iso_exists,
    is_isomorphic,
    k0_data,
    module_type,
    unit_orbit,
)
from .construct import (
    GeneratorSet,
    ListEntry,
    NotDivisible,
    Placement,
    automorphism_count,
    boxes,
    build_generators,
    build_graded_generators,
    from_x_matrices,
    leavitt_lexicographic_generators,
    make_placement,
    the_list,
    validate_placement,
)
from .fields import PrimeField, QQ, RationalField, field_from_name
from .fixtures import fixture_from_json, fixture_names, load_fixture
from .matrices import E, LMatrix, idem, matrix_unit, scaled_unit
from .profiles import (
    NotCoprime,
    Profile,
    h_sequence_closed_form,
    make_profile,
    reduce_large_d,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificateError",
    "CertificateReport",
    "ClosureResult",
    "E",
    "Element",
    "GeneratorSet",
    "K0Class",
    "LMatrix",
    "ListEntry",
    "Monomial",
    "NotCoprime",
    "NotDivisible",
    "Placement",
    "PrimeField",
    "Profile",
    "QQ",
    "RationalField",
    "RelationReport",
    "automorphism_count",
    "boxes",
    "build_generators",
    "build_graded_generators",
    "check_dagger",
    "check_relations",
    "classification_report",
    "default_targets",
    "degree_one_generating_set_possible",
    "degree_zero_image",
    "evaluate_certificate",
    "field_from_name",
    "fixture_from_json",
    "fixture_names",
    "from_x_matrices",
    "generation_certificate",
    "graded_iso_exists",
    "h_sequence_closed_form",
    "idem",
    "is_isomorphic",
    "k0_data",
    "leavitt_lexicographic_generators",
    "load_fixture",
    "make_placement",
    "make_profile",
    "matrix_unit",
    "module_type",
    "reduce_large_d",
    "reduce_terms",
    "reduce_word",
    "scaled_unit",
    "span_closure_verify",
    "the_list",
    "unit_orbit",
    "validate_placement",
]
