"""Terminating power series of nilpotent and unipotent matrices.

Every series here is a finite sum because the relevant argument is nilpotent:
the truncation index is the nilpotency index, so nothing is approximated.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import NotNilpotentError, SpectrumError
from .matrix import Matrix, identity, multiply, nilpotency_index, zeros
from .scalars import I

__all__ = ["exp_i", "log_unipotent", "cos_k"]


def _index_or_raise(Q: Matrix, what: str) -> int:
    try:
        return nilpotency_index(Q)
    except NotNilpotentError:
        raise SpectrumError(f"{what}: argument is not nilpotent, series would not terminate") from None


def exp_i(Q: Matrix) -> Matrix:
    """``exp(iQ) = sum_{n<m} (iQ)**n / n!`` for nilpotent Q of index m."""
    m = _index_or_raise(Q, "exp_i")
    iQ = Q.scale(I)
    total = identity(Q.rows)
    P = identity(Q.rows)
    for n in range(1, m):
        P = multiply(P, iQ)
        total = total + P.scale(Fraction(1, factorial(n)))
    return total


def log_unipotent(A: Matrix) -> Matrix:
    """Principal log of a unipotent A: ``-sum_{n<m} (I - A)**n / n``.

    Multiply by -i to recover Q from A = exp(iQ).
    """
    n = A.rows
    N = identity(n) - A
    try:
        m = nilpotency_index(N)
    except NotNilpotentError:
        raise SpectrumError("log_unipotent: matrix is not unipotent") from None
    total = zeros(n)
    P = identity(n)
    for j in range(1, m):
        P = multiply(P, N)
        total = total - P.scale(Fraction(1, j))
    return total


def cos_k(Q: Matrix, k: int) -> Matrix:
    """``cos(kQ) = sum_{2j<m} (-1)**j k**(2j) Q**(2j) / (2j)!``; cos(0) = I."""
    if k < 0:
        raise ValueError("cos_k needs k >= 0")
    m = _index_or_raise(Q, "cos_k")
    Q2 = multiply(Q, Q)
    total = identity(Q.rows)
    P = identity(Q.rows)
    j = 1
    while 2 * j < m:
        P = multiply(P, Q2)
        c = Fraction((-1) ** j * k ** (2 * j), factorial(2 * j))
        if c:
            total = total + P.scale(c)
        j += 1
    return total
