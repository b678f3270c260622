"""Brute-force regeneration of the Jordan-block dichotomy plus seeded identity checks."""

from __future__ import annotations

from dataclasses import dataclass

from .funcalc import cos_k, exp_i, log_unipotent
from .gelfand import (
    averaged_operator,
    dichotomy_table,
    factorization_check,
    local_nilpotency_index,
    symmetric_span_basis,
    verify_corollary,
    verify_theorem,
)
from .growth import coordinate_polynomials
from .instances import seeded_instances
from .jordan import jordan_block, jordan_power_closed, predicted_symmetric_degree
from .matrix import identity, matpow, multiply, neumann_inverse
from .scalars import I


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def check_dichotomy(d_max: int) -> CheckResult:
    bad = []
    rows = dichotomy_table(d_max)
    for r in rows:
        expected = (r.d, r.d + 1, r.d, predicted_symmetric_degree(r.d), r.d + 1, r.d + 1)
        if r.as_tuple() != expected:
            bad.append(r.d)
    return CheckResult("dichotomy_table", not bad, f"d=0..{d_max}, mismatched rows {bad}" if bad else f"d=0..{d_max}, {len(rows)} rows")


def check_closed_forms(d_max: int, k_max: int) -> CheckResult:
    bad = 0
    total = 0
    for d in range(d_max + 1):
        J = jordan_block(d + 1, 1)
        Jinv = neumann_inverse(J)
        for k in range(k_max + 1):
            total += 2
            bad += jordan_power_closed(d, k, "forward") != matpow(J, k)
            bad += jordan_power_closed(d, k, "inverse") != matpow(Jinv, k)
    return CheckResult("closed_form_vs_matpow", bad == 0, f"{total - bad}/{total} matrices equal, k=0..{k_max}")


def check_theorem_instances(seed_count: int, seed: int) -> list[CheckResult]:
    stats = {"factorization": 0, "chain": 0, "span_dim": 0, "remark": 0, "derived": 0}
    for inst in seeded_instances(seed_count, seed, 1):
        A, x = inst.matrix, inst.vector
        Id = identity(A.rows)
        m = local_nilpotency_index(A, x)
        n_dim = symmetric_span_basis(A, x).dimension
        T = averaged_operator(A)
        stats["factorization"] += factorization_check(A)
        stats["chain"] += (
            multiply(matpow(T - Id, n_dim), x).is_zero()
            and multiply(matpow(A - Id, 2 * n_dim), x).is_zero()
        )
        stats["span_dim"] += n_dim == (m + 1) // 2
        D = coordinate_polynomials(A, x, "symmetric").degree
        fwd = coordinate_polynomials(A, x, "forward").degree
        stats["remark"] += fwd <= D + 1
        stats["derived"] += all(
            verify_theorem(A, x, N, "derived").passed for N in range(max(1, D), D + 4)
        )
    return [
        CheckResult(f"theorem_{name}", hits == seed_count, f"{hits}/{seed_count} instances")
        for name, hits in stats.items()
    ]


def check_corollary_instances(seed_count: int, seed: int, k_max: int = 10) -> list[CheckResult]:
    stats = {"log_exp_round_trip": 0, "cos_identity": 0, "derived": 0}
    for inst in seeded_instances(seed_count, seed, 0):
        Q, x = inst.matrix, inst.vector
        A = exp_i(Q)
        stats["log_exp_round_trip"] += log_unipotent(A).scale(-I) == Q
        Ainv = neumann_inverse(A)
        ok = True
        P, Pinv = identity(Q.rows), identity(Q.rows)
        for k in range(k_max + 1):
            if P + Pinv != cos_k(Q, k).scale(2):
                ok = False
                break
            P, Pinv = multiply(P, A), multiply(Pinv, Ainv)
        stats["cos_identity"] += ok
        D = coordinate_polynomials(Q, x, "cosine").degree
        stats["derived"] += all(
            verify_corollary(Q, x, N, "derived").passed for N in range(max(1, D), D + 4)
        )
    return [
        CheckResult(f"corollary_{name}", hits == seed_count, f"{hits}/{seed_count} instances")
        for name, hits in stats.items()
    ]


def run_selftest(d_max: int, seed_count: int, seed: int = 0) -> list[CheckResult]:
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    if seed_count < 0:
        raise ValueError("seed count must be nonnegative")
    results = [check_dichotomy(d_max), check_closed_forms(d_max, 2 * d_max + 5)]
    results += check_theorem_instances(seed_count, seed)
    results += check_corollary_instances(seed_count, seed)
    return results
