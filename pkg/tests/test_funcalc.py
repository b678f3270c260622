from fractions import Fraction

import pytest
import sympy

from gelfand_hille.errors import SpectrumError
from gelfand_hille.funcalc import cos_k, exp_i, log_unipotent
from gelfand_hille.instances import seeded_instances
from gelfand_hille.matrix import identity, is_unipotent, is_nilpotent, matpow, multiply, neumann_inverse, zeros
from gelfand_hille.scalars import I, GaussianRational
from helpers import J, M


def _to_sympy(A):
    return sympy.Matrix(
        [[sympy.Rational(str(z.re)) + sympy.I * sympy.Rational(str(z.im)) for z in r] for r in A.tolist()]
    )


def test_exp_i_examples():
    assert exp_i(zeros(2)) == identity(2)
    assert exp_i(J(2, 0)) == M([[1, I], [0, 1]])
    assert exp_i(J(3, 0)) == M([[1, I, Fraction(-1, 2)], [0, 1, I], [0, 0, 1]])


def test_exp_i_against_sympy():
    for inst in seeded_instances(8, 3, 0, max_dim=5):
        Q = inst.matrix
        want = (sympy.I * _to_sympy(Q)).exp()
        assert sympy.simplify(_to_sympy(exp_i(Q)) - want) == sympy.zeros(Q.rows, Q.rows)


def test_log_unipotent_examples():
    assert log_unipotent(identity(3)) == zeros(3)
    assert log_unipotent(M([[1, I], [0, 1]])) == M([[0, I], [0, 0]])
    assert log_unipotent(J(2)) == M([[0, 1], [0, 0]])


def test_cos_k_examples():
    for Q in (J(3, 0), J(4, 0), zeros(2)):
        assert cos_k(Q, 0) == identity(Q.rows)
    for k in range(6):
        assert cos_k(J(2, 0), k) == identity(2)
        assert cos_k(J(4, 0), k)[0, 2] == Fraction(-k * k, 2)


def test_spectrum_errors():
    with pytest.raises(SpectrumError):
        exp_i(J(2))
    with pytest.raises(SpectrumError):
        cos_k(identity(2), 3)
    with pytest.raises(SpectrumError):
        log_unipotent(J(2, 0))


def test_round_trip_and_shapes():
    for inst in seeded_instances(40, 4, 0):
        Q = inst.matrix
        A = exp_i(Q)
        assert is_unipotent(A)
        L = log_unipotent(A)
        assert is_nilpotent(L)
        assert L.scale(-I) == Q


def test_homomorphism_and_commutation():
    for inst in seeded_instances(10, 5, 0, max_dim=5):
        Q = inst.matrix
        A = exp_i(Q)
        assert multiply(A, Q) == multiply(Q, A)
        P = identity(Q.rows)
        for k in range(21):
            assert P == exp_i(Q.scale(k))
            P = multiply(P, A)
        assert matpow(A, 20) == exp_i(Q.scale(20))


def test_two_cos_identity_small():
    for inst in seeded_instances(10, 6, 0, max_dim=6):
        Q = inst.matrix
        A = exp_i(Q)
        Ainv = neumann_inverse(A)
        for k in range(0, 12):
            assert matpow(A, k) + matpow(Ainv, k) == cos_k(Q, k).scale(2)


def test_cos_real_for_real_q():
    for inst in seeded_instances(10, 7, 0):
        if inst.matrix.is_real():
            assert cos_k(inst.matrix, 5).is_real()
    Q = M([[0, GaussianRational(1, 1)], [0, 0]])
    assert cos_k(Q, 4) == identity(2)
