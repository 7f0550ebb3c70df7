"""Finite Blaschke model spaces, compressed shifts, and certified similarity,
corona and block-decomposition machinery."""

from .blaschke import (
    BlaschkeProduct,
    DiskPoint,
    SequenceConstants,
    carleson_constant,
    delta_constant,
    eta_constant,
    eval_factor,
    eval_kernel,
    factor_gram,
    factor_gram_quadrature,
    product_of,
    sequence_constants,
)
from .carleson import (
    BlockDecomposition,
    CarlesonTable,
    CoronaCertificate,
    InvolutionGroup,
    UnitarizationResult,
    block_decompose,
    build_involution_group,
    corona_solve,
    diagonal_witness,
    dixmier_unitarizer,
    generalized_carleson_constant,
    pipeline_similarity,
)
from .funrep import FunctionRep, HermiteData, NewtonPolynomial, Polynomial, RationalQuotient
from .instances import GeneratorSpec, ValidationReport, generate, validate
from .modelspace import (
    C0Instance,
    ModelOperator,
    apply_function,
    build_model_operator,
    hankel_quotient_norm,
    inner_matrix,
    kernel_basis,
    kernel_span_check,
    mobius_matrix,
    model_instance,
    model_matrix,
    quotient_norm,
    restricted_norm,
)
from .similarity import (
    AngleReport,
    CyclicVectorReport,
    SimilarityCertificate,
    alpha_basis,
    angle_check,
    build_similarity,
    build_similarity_dim2,
    build_similarity_from_isomorphism_bound,
    dim2_lower_bound,
    enumerate_proper_divisors,
    find_cyclic_vector,
)

__version__ = "0.1.0"
