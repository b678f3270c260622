"""Krylov spaces, the averaged operator, and exact checks of the growth/nilpotency dichotomy.

Two readings of the conclusion exponent are supported:

``printed``
    even N -> N+1, odd N -> N+2.
``derived``
    even N -> N+2, odd N -> N+1.  This is what the Jordan-block growth degrees
    force: the symmetric orbit degree D is always even and the local index m
    satisfies m in {D+1, D+2}.

The two disagree for even N; J_4(1) with x = e_4 and N = 2 separates them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Literal, Optional

from .errors import ConsistencyError, SpectrumError
from .funcalc import exp_i
from .growth import Degree, coordinate_polynomials, format_degree
from .jordan import jordan_block
from .matrix import (
    Matrix,
    Vector,
    identity,
    is_nilpotent,
    is_unipotent,
    matpow,
    multiply,
    neumann_inverse,
    rank,
    unit_vector,
)

__all__ = [
    "KrylovBasis",
    "VerificationReport",
    "DichotomyRow",
    "krylov_basis",
    "symmetric_span_basis",
    "averaged_operator",
    "factorization_check",
    "local_nilpotency_index",
    "annihilation_index",
    "conclusion_exponent",
    "verify_theorem",
    "verify_corollary",
    "dichotomy_table",
    "VARIANTS",
]

Variant = Literal["printed", "derived"]
VARIANTS = ("printed", "derived")


@dataclass(frozen=True)
class KrylovBasis:
    vectors: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def as_matrix(self) -> Matrix:
        """Basis vectors as the rows of a matrix."""
        return Matrix(v.entries for v in self.vectors)

    def contains(self, v: Vector) -> bool:
        if v.is_zero():
            return True
        if not self.vectors:
            return False
        return rank(Matrix([*(u.entries for u in self.vectors), v.entries])) == self.dimension


def _require_unipotent(A: Matrix, what: str):
    if not is_unipotent(A):
        raise SpectrumError(f"{what} needs a unipotent matrix (spectrum {{1}})")


def _grow_basis(vectors):
    basis = []
    for v in vectors:
        if rank(Matrix([*(u.entries for u in basis), v.entries])) == len(basis):
            # exact arithmetic: the first plateau is permanent
            break
        basis.append(v)
    return KrylovBasis(tuple(basis))


def krylov_basis(A: Matrix, x: Vector) -> KrylovBasis:
    """Basis x, Ax, A^2x, ... of the smallest A-invariant subspace containing x."""
    if x.is_zero():
        return KrylovBasis(())

    def seq():
        v = x
        for _ in range(x.dim + 1):
            yield v
            v = multiply(A, v)

    return _grow_basis(seq())


def symmetric_span_basis(A: Matrix, x: Vector) -> KrylovBasis:
    """Basis of span{(A^k + A^-k) x : k >= 0}."""
    _require_unipotent(A, "symmetric_span_basis")
    if x.is_zero():
        return KrylovBasis(())
    Ainv = neumann_inverse(A)

    def seq():
        f = b = x
        for _ in range(x.dim + 1):
            yield f + b
            f = multiply(A, f)
            b = multiply(Ainv, b)

    return _grow_basis(seq())


def averaged_operator(A: Matrix) -> Matrix:
    """T = (A + A^-1) / 2."""
    _require_unipotent(A, "averaged_operator")
    return (A + neumann_inverse(A)).scale(Fraction(1, 2))


def factorization_check(A: Matrix) -> bool:
    """Exact check of T - I == (A^-1 / 2)(A - I)^2."""
    _require_unipotent(A, "factorization_check")
    n = A.rows
    Id = identity(n)
    lhs = averaged_operator(A) - Id
    AmI = A - Id
    rhs = multiply(neumann_inverse(A).scale(Fraction(1, 2)), multiply(AmI, AmI))
    return lhs == rhs


def annihilation_index(N: Matrix, x: Vector) -> int:
    """Least m >= 0 with N^m x == 0 (0 only for x == 0). N must be nilpotent."""
    v = x
    m = 0
    while not v.is_zero():
        if m > x.dim:
            raise SpectrumError("vector is not annihilated by any power; matrix not nilpotent")
        v = multiply(N, v)
        m += 1
    return m


def local_nilpotency_index(A: Matrix, x: Vector) -> int:
    """Least m with (A - I)^m x == 0; 0 for the zero vector."""
    _require_unipotent(A, "local_nilpotency_index")
    return annihilation_index(A - identity(A.rows), x)


def conclusion_exponent(N: int, variant: Variant = "derived") -> int:
    """Exponent e in the conclusion (A - I)^e x = 0 for growth bound O(k^N)."""
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    even = N % 2 == 0
    if variant == "printed":
        return N + 1 if even else N + 2
    if variant == "derived":
        return N + 2 if even else N + 1
    raise ValueError(f"variant must be 'printed' or 'derived', got {variant!r}")


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    variant: str
    measured_degree: Degree
    local_index: int
    tested_n: int
    conclusion_exponent: int
    annihilated: bool
    witness: Optional[Vector]
    trivial_input: bool
    hypothesis_satisfied: bool
    cross_checked: Optional[bool] = field(default=None)

    @property
    def passed(self) -> bool:
        """The implication holds: hypothesis false, or conclusion verified."""
        return self.annihilated or not self.hypothesis_satisfied

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "variant": self.variant,
            "measured_degree": format_degree(self.measured_degree),
            "local_index": self.local_index,
            "tested_N": self.tested_n,
            "conclusion_exponent": self.conclusion_exponent,
            "annihilated": self.annihilated,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "trivial_input": self.trivial_input,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "cross_checked": self.cross_checked,
            "passed": self.passed,
        }


def _report(mode, variant, N, degree, index, step: Matrix, x: Vector, cross=None):
    e = conclusion_exponent(N, variant)
    residual = multiply(matpow(step, e), x)
    annihilated = residual.is_zero()
    return VerificationReport(
        mode=mode,
        variant=variant,
        measured_degree=degree,
        local_index=index,
        tested_n=N,
        conclusion_exponent=e,
        annihilated=annihilated,
        witness=None if annihilated else residual,
        trivial_input=x.is_zero(),
        hypothesis_satisfied=degree <= N,
        cross_checked=cross,
    )


# degree and index depend only on the (immutable, hashable) instance, not on N
@lru_cache(maxsize=256)
def _theorem_facts(A: Matrix, x: Vector) -> tuple[Degree, int]:
    return coordinate_polynomials(A, x, "symmetric").degree, local_nilpotency_index(A, x)


@lru_cache(maxsize=256)
def _corollary_facts(Q: Matrix, x: Vector) -> tuple[Degree, int, Matrix]:
    return coordinate_polynomials(Q, x, "cosine").degree, annihilation_index(Q, x), exp_i(Q)


def verify_theorem(A: Matrix, x: Vector, N: int, variant: Variant = "derived") -> VerificationReport:
    """Check ||(A^k + A^-k)x|| = O(k^N)  =>  (A - I)^e x = 0 on one instance."""
    conclusion_exponent(N, variant)
    _require_unipotent(A, "verify_theorem")
    degree, index = _theorem_facts(A, x)
    return _report("theorem", variant, N, degree, index, A - identity(A.rows), x)


def verify_corollary(Q: Matrix, x: Vector, N: int, variant: Variant = "derived") -> VerificationReport:
    """Check ||cos(kQ)x|| = O(k^N)  =>  Q^e x = 0, and rerun through A = exp(iQ)."""
    conclusion_exponent(N, variant)
    if not is_nilpotent(Q):
        raise SpectrumError("verify_corollary needs a nilpotent matrix")
    degree, index, A = _corollary_facts(Q, x)
    via_exp = verify_theorem(A, x, N, variant)
    report = _report("corollary", variant, N, degree, index, Q, x, cross=True)
    if (
        via_exp.annihilated != report.annihilated
        or via_exp.measured_degree != degree
        or via_exp.local_index != index
    ):
        raise ConsistencyError(
            "corollary and theorem disagree through A = exp(iQ): "
            f"{report.to_json()} vs {via_exp.to_json()}"
        )
    return report


@dataclass(frozen=True)
class DichotomyRow:
    d: int
    block_size: int
    forward_degree: Degree
    symmetric_degree: Degree
    index: int
    minimal_exponent: int

    def as_tuple(self) -> tuple:
        return (self.d, self.block_size, self.forward_degree, self.symmetric_degree, self.index, self.minimal_exponent)


def _minimal_exponent(A: Matrix, x: Vector) -> int:
    # brute force over explicit matrix powers, independent of annihilation_index
    AmI = A - identity(A.rows)
    for e in range(A.rows + 1):
        if multiply(matpow(AmI, e), x).is_zero():
            return e
    raise SpectrumError("no power of A - I annihilates x")


def dichotomy_table(d_max: int) -> list[DichotomyRow]:
    """Measured degrees and indices for the cyclic vector e_{d+1} of J_{d+1}(1), d = 0..d_max."""
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    rows = []
    for d in range(d_max + 1):
        A = jordan_block(d + 1, 1)
        x = unit_vector(d + 1, d + 1)
        rows.append(
            DichotomyRow(
                d=d,
                block_size=d + 1,
                forward_degree=coordinate_polynomials(A, x, "forward").degree,
                symmetric_degree=coordinate_polynomials(A, x, "symmetric").degree,
                index=local_nilpotency_index(A, x),
                minimal_exponent=_minimal_exponent(A, x),
            )
        )
    return rows

