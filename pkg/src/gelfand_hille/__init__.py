"""Exact unipotent/nilpotent matrix orbits and Gelfand-Hille type growth checks."""

from .errors import ConsistencyError, GelfandHilleError, NotNilpotentError, ShapeError, SpectrumError
from .funcalc import cos_k, exp_i, log_unipotent
from .gelfand import (
    KrylovBasis,
    VerificationReport,
    averaged_operator,
    conclusion_exponent,
    dichotomy_table,
    factorization_check,
    krylov_basis,
    local_nilpotency_index,
    symmetric_span_basis,
    verify_corollary,
    verify_theorem,
)
from .growth import (
    MINUS_INFINITY,
    OrbitProfile,
    Polynomial,
    coordinate_polynomials,
    finite_difference_degree,
    growth_degree,
    orbit_vector,
    quasi_dominated,
)
from .jordan import (
    JordanSpec,
    assemble,
    is_cyclic_for_block,
    jordan_block,
    jordan_power_closed,
    predicted_symmetric_degree,
    symmetric_power_closed,
)
from .matrix import (
    Matrix,
    Vector,
    identity,
    is_unipotent,
    matpow,
    multiply,
    neumann_inverse,
    nilpotency_index,
    rank_and_kernel,
    unit_vector,
    vec_norm,
    zeros,
)
from .scalars import GaussianRational, abs1, binomial

__version__ = "0.1.0"
