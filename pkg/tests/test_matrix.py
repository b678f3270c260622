import random
from fractions import Fraction

import pytest
import sympy

from gelfand_hille.errors import NotNilpotentError, ShapeError, SpectrumError
from gelfand_hille.instances import seeded_instances
from gelfand_hille.matrix import (
    Matrix,
    Vector,
    direct_sum,
    identity,
    is_unipotent,
    matpow,
    multiply,
    neumann_inverse,
    nilpotency_index,
    rank_and_kernel,
    vec_norm,
    zeros,
)
from gelfand_hille.scalars import GaussianRational
from helpers import J, M, V, e


def test_multiply_examples():
    v = V([3, -1, Fraction(1, 2)])
    assert multiply(identity(3), v) == v
    assert multiply(J(2, 0), V([0, 1])) == V([1, 0])
    assert multiply(J(2), J(2)) == M([[1, 2], [0, 1]])


def test_multiply_complex_against_sympy():
    rng = random.Random(3)
    for _ in range(20):
        a = [[GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(3)] for _ in range(2)]
        b = [[GaussianRational(rng.randint(-3, 3), Fraction(rng.randint(-3, 3), 2)) for _ in range(4)] for _ in range(3)]
        to_sym = lambda rows: sympy.Matrix([[sympy.Rational(str(z.re)) + sympy.I * sympy.Rational(str(z.im)) for z in r] for r in rows])
        got = multiply(M(a), M(b))
        want = to_sym(a) * to_sym(b)
        for i in range(2):
            for j in range(4):
                z = got[i, j]
                assert sympy.simplify(sympy.Rational(str(z.re)) + sympy.I * sympy.Rational(str(z.im)) - want[i, j]) == 0


def test_multiply_shape_error():
    with pytest.raises(ShapeError):
        multiply(identity(2), identity(3))
    with pytest.raises(ShapeError):
        multiply(identity(2), V([1, 2, 3]))


def test_matpow_examples():
    A = M([[1, 2], [3, 4]])
    assert matpow(A, 0) == identity(2)
    assert matpow(J(2), 3) == M([[1, 3], [0, 1]])
    assert matpow(J(3), 4) == M([[1, 4, 6], [0, 1, 4], [0, 0, 1]])
    with pytest.raises(ShapeError):
        matpow(M([[1, 2]]), 2)


def test_matpow_homomorphism():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(1, 3)
        A = M([[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)])
        j, k = rng.randint(0, 50), rng.randint(0, 50)
        assert matpow(A, j + k) == multiply(matpow(A, j), matpow(A, k))


def test_neumann_inverse_examples():
    assert neumann_inverse(identity(3)) == identity(3)
    assert neumann_inverse(J(2)) == M([[1, -1], [0, 1]])
    inv = neumann_inverse(J(3))
    assert inv == M([[1, -1, 1], [0, 1, -1], [0, 0, 1]])
    assert multiply(J(3), inv) == identity(3)


def test_neumann_inverse_rejects_non_unipotent():
    with pytest.raises(SpectrumError):
        neumann_inverse(identity(2).scale(2))


def test_neumann_inverse_seeded_unipotent():
    for inst in seeded_instances(300, 1, 1):
        A = inst.matrix
        inv = neumann_inverse(A)
        Id = identity(A.rows)
        assert multiply(A, inv) == Id
        assert multiply(inv, A) == Id
        assert is_unipotent(inv)


@pytest.mark.parametrize(
    "m, expected",
    [(zeros(3), 1), (J(4, 0), 4), (direct_sum([J(3, 0), J(2, 0)]), 3)],
)
def test_nilpotency_index_examples(m, expected):
    assert nilpotency_index(m) == expected


def test_nilpotency_index_jordan():
    for d in range(1, 11):
        assert nilpotency_index(J(d + 1, 0)) == d + 1


def test_nilpotency_index_not_nilpotent():
    with pytest.raises(NotNilpotentError):
        nilpotency_index(J(3))
    with pytest.raises(NotNilpotentError):
        nilpotency_index(M([[0, 1], [1, 0]]))


@pytest.mark.parametrize(
    "m, expected",
    [(J(5), True), (J(2, 0), False), (identity(2).scale(2), False), (M([[1, 5], [0, 1]]), True)],
)
def test_is_unipotent_examples(m, expected):
    assert is_unipotent(m) is expected


def test_rank_and_kernel_examples():
    assert rank_and_kernel(identity(3)) == (3, [])
    r, ker = rank_and_kernel(zeros(2))
    assert r == 0 and ker == [e(2, 1), e(2, 2)]
    r, ker = rank_and_kernel(M([[1, 1], [1, 1]]))
    assert r == 1 and ker == [V([1, -1])]


def test_rank_and_kernel_against_sympy():
    rng = random.Random(5)
    for _ in range(60):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        true_rank = rng.randint(0, min(rows, cols))
        # low-rank integer matrix as a product of random factors
        if true_rank == 0:
            data = [[0] * cols for _ in range(rows)]
        else:
            L = [[rng.randint(-3, 3) for _ in range(true_rank)] for _ in range(rows)]
            R = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(true_rank)]
            data = [[sum(L[i][t] * R[t][j] for t in range(true_rank)) for j in range(cols)] for i in range(rows)]
        A = M(data)
        r, ker = rank_and_kernel(A)
        assert r == sympy.Matrix(data).rank()
        assert r + len(ker) == cols
        for v in ker:
            assert multiply(A, v).is_zero()
        if ker:
            assert rank_and_kernel(M([v.entries for v in ker]))[0] == len(ker)


def test_rank_complex_rational():
    i = GaussianRational(0, 1)
    A = M([[1, i], [i, -1]])  # second row = i * first
    assert rank_and_kernel(A)[0] == 1
    B = M([[Fraction(1, 2), i], [1, Fraction(1, 3)]])
    assert rank_and_kernel(B)[0] == 2


@pytest.mark.parametrize(
    "v, expected",
    [
        (V([0, 0, 2]), 2),
        (V([-25, 25, 0, 2]), 52),
        (V([GaussianRational(0, 1), 1]), 2),
        (V([0, 0]), 0),
    ],
)
def test_vec_norm_examples(v, expected):
    assert vec_norm(v) == expected


def test_json_round_trip():
    A = M([[GaussianRational(Fraction(1, 3), -2), 0], [5, GaussianRational(0, 1)]])
    assert Matrix.from_json(A.to_json()) == A
    v = V([1, GaussianRational(Fraction(-1, 2), 1)])
    assert Vector.from_json(v.to_json()) == v
    assert v.to_json()["dim"] == 2
    assert A.to_json()["entries"][0][0] == {"re": "1/3", "im": "-2"}


def test_json_shape_mismatch():
    with pytest.raises(ShapeError):
        Matrix.from_json({"rows": 3, "cols": 2, "entries": [[1, 2], [3, 4]]})
    with pytest.raises(ShapeError):
        Matrix([[1, 2], [3]])


def test_direct_sum():
    assert direct_sum([J(2), J(1)]) == M([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
