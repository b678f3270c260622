"""Seeded random (matrix, vector) instances for property checks and the self-test."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .jordan import JordanSpec, assemble
from .matrix import Matrix, Vector, multiply
from .scalars import GaussianRational


@dataclass(frozen=True)
class Instance:
    spec: JordanSpec
    matrix: Matrix
    conjugator: Matrix
    vector: Vector


def random_blocks(rng: random.Random, max_dim: int) -> tuple[int, ...]:
    dim = rng.randint(1, max_dim)
    blocks = []
    while dim:
        b = rng.randint(1, dim)
        blocks.append(b)
        dim -= b
    return tuple(blocks)


def _random_entry(rng: random.Random) -> GaussianRational:
    if rng.random() < 0.4:
        return GaussianRational(0)
    re = rng.randint(-2, 2)
    im = rng.randint(-1, 1) if rng.random() < 0.25 else 0
    return GaussianRational(re, im)


def random_instance(rng: random.Random, eigenvalue: int, max_dim: int = 8) -> Instance:
    """Conjugated Jordan matrix with a nonzero vector x = S y, y drawn in the Jordan basis."""
    spec = JordanSpec(eigenvalue, random_blocks(rng, max_dim), rng.randrange(2**31))
    A, S = assemble(spec)
    while True:
        y = Vector(_random_entry(rng) for _ in range(spec.dim))
        if not y.is_zero():
            break
    return Instance(spec, A, S, multiply(S, y))


def seeded_instances(count: int, seed: int, eigenvalue: int, max_dim: int = 8) -> list[Instance]:
    rng = random.Random(f"{seed}:{eigenvalue}:{max_dim}")
    return [random_instance(rng, eigenvalue, max_dim) for _ in range(count)]
