"""Exact polynomial growth degree of matrix orbits.

For unipotent A every coordinate of A**k x, A**-k x and (A**k + A**-k) x is a
polynomial in k (and likewise cos(kQ)x for nilpotent Q).  The growth degree of
the orbit norm is the largest coordinate degree, so O(k**N) reduces to an
integer comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Sequence, Union

from .errors import ConsistencyError, ShapeError, SpectrumError
from .funcalc import cos_k
from .matrix import (
    Matrix,
    Vector,
    is_nilpotent,
    is_unipotent,
    matpow,
    multiply,
    neumann_inverse,
    vec_norm,
)
from .scalars import ZERO, GaussianRational, as_gaussian

__all__ = [
    "MINUS_INFINITY",
    "Mode",
    "MODES",
    "Polynomial",
    "OrbitProfile",
    "orbit_vector",
    "orbit_samples",
    "orbit_norms",
    "coordinate_polynomials",
    "interpolate_samples",
    "growth_degree",
    "quasi_dominated",
    "finite_difference_degree",
    "format_degree",
]

Mode = Literal["forward", "inverse", "symmetric", "cosine"]
MODES = ("forward", "inverse", "symmetric", "cosine")

# degree of the zero polynomial; below every integer
MINUS_INFINITY = -math.inf

Degree = Union[int, float]


def format_degree(d: Degree):
    """JSON-friendly degree: an int, or the string "-inf"."""
    return "-inf" if d == MINUS_INFINITY else int(d)


class Polynomial:
    """Polynomial in k with exact Q(i) coefficients; ``coefficients[p]`` multiplies k**p."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [as_gaussian(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> Degree:
        return len(self.coefficients) - 1 if self.coefficients else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coefficients)

    def __call__(self, k) -> GaussianRational:
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_gaussian(other)
            return Polynomial(c * a for a in self.coefficients)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for p in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[p]
            if not c:
                continue
            mono = "" if p == 0 else ("k" if p == 1 else f"k^{p}")
            cs = str(c)
            if not c.is_real() and c.re != 0:
                cs = f"({cs})"
            if mono and cs == "1":
                term = mono
            elif mono and cs == "-1":
                term = "-" + mono
            else:
                term = cs + ("*" + mono if mono else "")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [c.to_json() for c in self.coefficients]

    @classmethod
    def interpolate(cls, points: Sequence[tuple[int, object]]) -> Polynomial:
        """Interpolating polynomial through distinct integer nodes (Newton divided differences)."""
        xs = [x for x, _ in points]
        coef = [as_gaussian(y) for _, y in points]
        n = len(xs)
        for level in range(1, n):
            for i in range(n - 1, level - 1, -1):
                if coef[i] or coef[i - 1]:
                    coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
        # expand the Newton form into monomial coefficients, innermost first
        out = [ZERO] * n
        size = 0
        for i in range(n - 1, -1, -1):
            # out <- out * (k - xs[i]) + coef[i]
            shifted = [ZERO] + out[:size]
            for j in range(size):
                shifted[j] = shifted[j] - out[j] * xs[i]
            shifted[0] = shifted[0] + coef[i]
            size += 1
            out[:size] = shifted[:size]
        return cls(out[:size])


@dataclass(frozen=True)
class OrbitProfile:
    mode: str
    coord_polys: tuple[Polynomial, ...]
    degree: Degree

    def evaluate(self, k: int) -> Vector:
        return Vector(p(k) for p in self.coord_polys)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "degree": format_degree(self.degree),
            "coordinates": [p.to_json() for p in self.coord_polys],
            "coordinates_text": [str(p) for p in self.coord_polys],
        }


def _check_mode(A: Matrix, x: Vector, mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown orbit mode {mode!r}; expected one of {MODES}")
    if not A.is_square or A.rows != x.dim:
        raise ShapeError(f"matrix {A.shape} and vector of dim {x.dim} do not fit")
    if mode in ("inverse", "symmetric") and not is_unipotent(A):
        raise SpectrumError(f"{mode} orbit needs a unipotent matrix")
    if mode == "cosine" and not is_nilpotent(A):
        raise SpectrumError("cosine orbit needs a nilpotent matrix")


def orbit_vector(A: Matrix, x: Vector, k: int, mode: Mode = "forward") -> Vector:
    """A**k x, A**-k x, (A**k + A**-k) x, or cos(kA) x."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    _check_mode(A, x, mode)
    if mode == "cosine":
        return multiply(cos_k(A, k), x)
    if mode == "forward":
        return multiply(matpow(A, k), x)
    Ainv = neumann_inverse(A)
    back = multiply(matpow(Ainv, k), x)
    if mode == "inverse":
        return back
    return multiply(matpow(A, k), x) + back


def orbit_samples(A: Matrix, x: Vector, ks: Sequence[int], mode: Mode = "forward") -> list[Vector]:
    """Orbit vectors at several k, walking the powers incrementally."""
    _check_mode(A, x, mode)
    if any(k < 0 for k in ks):
        raise ValueError("k must be nonnegative")
    if not ks:
        return []
    if mode == "cosine":
        return [multiply(cos_k(A, k), x) for k in ks]
    kmax = max(ks)
    wanted = set(ks)
    fwd = {}
    bwd = {}
    if mode in ("forward", "symmetric"):
        v = x
        for k in range(kmax + 1):
            if k in wanted:
                fwd[k] = v
            v = multiply(A, v)
    if mode in ("inverse", "symmetric"):
        Ainv = neumann_inverse(A)
        v = x
        for k in range(kmax + 1):
            if k in wanted:
                bwd[k] = v
            v = multiply(Ainv, v)
    if mode == "forward":
        return [fwd[k] for k in ks]
    if mode == "inverse":
        return [bwd[k] for k in ks]
    return [fwd[k] + bwd[k] for k in ks]


def orbit_norms(A: Matrix, x: Vector, k_max: int, mode: Mode = "forward") -> list[Fraction]:
    """Exact norms of the orbit at k = 0..k_max."""
    return [vec_norm(v) for v in orbit_samples(A, x, range(k_max + 1), mode)]


def interpolate_samples(
    sample: Callable[[Sequence[int]], list[Vector]], n: int, dim: int
) -> tuple[Polynomial, ...]:
    """Fit each coordinate through k = 0..n, then check k = n+1, n+2, 2n+5.

    ``sample(ks)`` must return the orbit vectors at ``ks``.  A mismatch at a
    check point means the orbit is not polynomial of degree <= n.
    """
    fit_ks = list(range(n + 1))
    check_ks = [n + 1, n + 2, 2 * n + 5]
    vecs = sample(fit_ks + check_ks)
    fit, check = vecs[: n + 1], vecs[n + 1 :]
    polys = tuple(
        Polynomial.interpolate([(k, v[i]) for k, v in zip(fit_ks, fit)]) for i in range(dim)
    )
    for k, v in zip(check_ks, check):
        for i, p in enumerate(polys):
            if p(k) != v[i]:
                raise ConsistencyError(
                    f"orbit coordinate {i} is not a polynomial of degree <= {n}: mismatch at k={k}"
                )
    return polys


def coordinate_polynomials(A: Matrix, x: Vector, mode: Mode = "forward") -> OrbitProfile:
    """Exact polynomial form of every orbit coordinate, plus the profile degree."""
    _check_mode(A, x, mode)
    if mode == "forward" and not is_unipotent(A):
        raise SpectrumError("forward orbit profile needs a unipotent matrix")
    n = x.dim
    polys = interpolate_samples(lambda ks: orbit_samples(A, x, ks, mode), n, n)
    degree = max((p.degree for p in polys), default=MINUS_INFINITY)
    return OrbitProfile(mode, polys, degree)


def growth_degree(profile: OrbitProfile) -> Degree:
    """D such that the orbit norm is equivalent to k**D (MINUS_INFINITY for the zero orbit)."""
    return max((p.degree for p in profile.coord_polys), default=MINUS_INFINITY)


def quasi_dominated(profile: OrbitProfile, N: int) -> bool:
    """Whether ||orbit(k)|| = O(k**N)."""
    return growth_degree(profile) <= N


def finite_difference_degree(samples: Sequence, degree_bound: int | None = None) -> Degree:
    """Degree read off the forward-difference table of consecutive samples.

    Returns the largest r whose r-th difference is not identically zero on the
    window; MINUS_INFINITY if every sample is zero.  At least ``degree_bound + 2``
    samples are needed for the answer to be conclusive (2 when no bound given).
    """
    need = 2 if degree_bound is None else degree_bound + 2
    if len(samples) < need:
        raise ValueError(f"finite_difference_degree needs at least {need} samples, got {len(samples)}")
    row = list(samples)
    best = MINUS_INFINITY
    r = 0
    while row:
        if any(row):
            best = r
        row = [b - a for a, b in zip(row, row[1:])]
        r += 1
    return best
