"""Jordan blocks, seeded test instances, and closed forms for powers of J_{d+1}(1)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal, Optional

from .errors import GelfandHilleError
from .matrix import Matrix, Vector, direct_sum, identity, multiply
from .scalars import falling_binomial

__all__ = [
    "JordanSpec",
    "jordan_block",
    "assemble",
    "conjugator_pair",
    "jordan_power_closed",
    "symmetric_power_closed",
    "is_cyclic_for_block",
    "predicted_symmetric_degree",
]

Direction = Literal["forward", "inverse"]


class SpecError(GelfandHilleError, ValueError):
    pass


@dataclass(frozen=True)
class JordanSpec:
    """Direct sum of Jordan blocks sharing eigenvalue 0 or 1, optionally conjugated."""

    eigenvalue: int
    blocks: tuple[int, ...]
    seed: Optional[int] = None

    def __post_init__(self):
        if self.eigenvalue not in (0, 1) or isinstance(self.eigenvalue, bool):
            raise SpecError(f"eigenvalue must be 0 or 1, got {self.eigenvalue!r}")
        blocks = tuple(self.blocks)
        if not blocks:
            raise SpecError("blocks must be a nonempty list")
        for b in blocks:
            if not isinstance(b, int) or isinstance(b, bool) or b < 1:
                raise SpecError(f"block sizes must be positive integers, got {b!r}")
        object.__setattr__(self, "blocks", blocks)
        if self.seed is not None and (not isinstance(self.seed, int) or isinstance(self.seed, bool)):
            raise SpecError(f"seed must be an integer, got {self.seed!r}")

    @property
    def dim(self) -> int:
        return sum(self.blocks)

    def to_json(self) -> dict:
        out = {"eigenvalue": self.eigenvalue, "blocks": list(self.blocks)}
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    @classmethod
    def from_json(cls, obj) -> JordanSpec:
        if not isinstance(obj, dict):
            raise SpecError("JordanSpec JSON must be an object")
        unknown = set(obj) - {"eigenvalue", "blocks", "seed"}
        if unknown:
            raise SpecError(f"unknown JordanSpec fields: {sorted(unknown)}")
        try:
            return cls(obj["eigenvalue"], tuple(obj["blocks"]), obj.get("seed"))
        except KeyError as e:
            raise SpecError(f"JordanSpec missing field {e.args[0]!r}") from None
        except TypeError as e:
            raise SpecError(str(e)) from None


def jordan_block(size: int, eigenvalue: int) -> Matrix:
    if size < 1:
        raise ValueError(f"Jordan block size must be >= 1, got {size}")
    return Matrix(
        [[eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(size)] for i in range(size)]
    )


def conjugator_pair(dim: int, seed: int) -> tuple[Matrix, Matrix]:
    """Seeded unimodular integer S and its exact inverse.

    S is the product of 3*dim elementary operations "row j += c * row i" with
    c in {-2, -1, 1, 2}.  For dim == 1 there is no such operation and S = I.
    """
    rng = random.Random(seed)
    S = [[int(i == j) for j in range(dim)] for i in range(dim)]
    Sinv = [[int(i == j) for j in range(dim)] for i in range(dim)]
    if dim > 1:
        for _ in range(3 * dim):
            i, j = rng.sample(range(dim), 2)
            c = rng.choice((-2, -1, 1, 2))
            # S <- E S with E = I + c e_j e_i^T
            S[j] = [a + c * b for a, b in zip(S[j], S[i])]
            # Sinv <- Sinv E^{-1}: column i -= c * column j
            for row in Sinv:
                row[i] -= c * row[j]
    return Matrix(S), Matrix(Sinv)


def assemble(spec: JordanSpec) -> tuple[Matrix, Matrix]:
    """Return ``(S J S^-1, S)`` for the block sum J described by ``spec``."""
    J = direct_sum([jordan_block(b, spec.eigenvalue) for b in spec.blocks])
    if spec.seed is None:
        return J, identity(spec.dim)
    S, Sinv = conjugator_pair(spec.dim, spec.seed)
    return multiply(multiply(S, J), Sinv), S


def jordan_power_closed(d: int, k: int, direction: Direction = "forward") -> Matrix:
    """J_{d+1}(1)**k (forward) or J_{d+1}(1)**(-k) (inverse) from binomials.

    Entry (i, i+j) is C(k, j) forward and (-1)**j C(k+j-1, j) inverse, both
    through the falling-factorial extension so k < j is handled.
    """
    if d < 0 or k < 0:
        raise ValueError("d and k must be nonnegative")
    if direction == "forward":
        coeff = [falling_binomial(k, j) for j in range(d + 1)]
    elif direction == "inverse":
        coeff = [(-1) ** j * falling_binomial(k + j - 1, j) for j in range(d + 1)]
    else:
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    n = d + 1
    return Matrix([[coeff[j - i] if j >= i else 0 for j in range(n)] for i in range(n)])


def symmetric_power_closed(d: int, k: int) -> Matrix:
    """J_{d+1}(1)**k + J_{d+1}(1)**(-k) from the closed forms."""
    return jordan_power_closed(d, k, "forward") + jordan_power_closed(d, k, "inverse")


def is_cyclic_for_block(x: Vector) -> bool:
    """A vector is cyclic for a single Jordan block iff its last entry is nonzero."""
    return bool(x.entries[-1])


def predicted_symmetric_degree(d: int) -> int:
    """Growth degree of (J^k + J^-k)x for cyclic x on J_{d+1}(1): d if d even, else d-1."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return 2 * (d // 2)
