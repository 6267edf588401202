"""Exact reflection tuples over algebraic number fields, the Hurwitz braid
action with orbit enumeration, Coxeter-element analysis, and constructive
finiteness / infiniteness certification of the generated reflection group."""

__version__ = "0.1.0"

from .errors import (
    BadDiagonal,
    BadSubsequence,
    DimensionMismatch,
    DivisionByZero,
    FieldConstructionError,
    FieldMismatch,
    IndexOutOfRange,
    InputError,
    InternalInvariantError,
    InternalMismatch,
    MultipleRootsInInterval,
    NoRootInInterval,
    NonIntegerCoefficients,
    NonMonic,
    NotAReflection,
    NotIrreducible,
    NotSquare,
    NotSymmetric,
    ParseError,
    Singular,
)
from .exactlinalg import Matrix, Poly, lagrange_interpolate
from .finiteness import (
    CertificateReport,
    CertifyCaps,
    ClosureResult,
    EigenvalueWitness,
    GaloisPositivity,
    JordanWitness,
    OrderResult,
    certify,
    element_order,
    galois_pd_check,
    group_closure,
    pair_product_order,
)
from .hurwitz import (
    BraidMove,
    OrbitResult,
    TupleState,
    apply_word,
    gamma_apply,
    gamma_power_check,
    orbit,
    prefix_realize,
    sigma_apply,
    word_from_string,
    word_to_string,
)
from .numberfield import Box, Embedding, FieldElement, NumberField
from .reflection import (
    CartanMatrix,
    ColemanDecomposition,
    ReflectionTuple,
    cartan_blocks,
    cartan_of_tuple,
    coleman_charpoly,
    coleman_decompose,
    coxeter_element,
    reflections_from_cartan,
    root_coroot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
