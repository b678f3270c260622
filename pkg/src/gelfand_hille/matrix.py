"""Dense exact matrices and vectors over the Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import NotNilpotentError, ShapeError, SpectrumError
from .scalars import ONE, ZERO, GaussianRational, _norm, abs1, as_gaussian

__all__ = [
    "Matrix",
    "Vector",
    "identity",
    "zeros",
    "unit_vector",
    "zero_vector",
    "direct_sum",
    "multiply",
    "matpow",
    "neumann_inverse",
    "nilpotency_index",
    "is_unipotent",
    "is_nilpotent",
    "rank_and_kernel",
    "rank",
    "vec_norm",
]


def _row(values) -> tuple:
    return tuple(as_gaussian(v) for v in values)


class Vector:
    """Immutable column vector."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        entries = _row(entries)
        if not entries:
            raise ShapeError("vector must have positive dimension")
        self.entries = entries

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __bool__(self):
        return any(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: Vector) -> Vector:
        _check_same_dim(self, other)
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: Vector) -> Vector:
        _check_same_dim(self, other)
        return Vector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return Vector(-a for a in self.entries)

    def scale(self, c) -> Vector:
        c = as_gaussian(c)
        return Vector(c * a for a in self.entries)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Vector([{', '.join(str(e) for e in self.entries)}])"

    def to_json(self) -> dict:
        return {"dim": self.dim, "entries": [e.to_json() for e in self.entries]}

    @classmethod
    def from_json(cls, obj) -> Vector:
        if isinstance(obj, list):
            return cls(GaussianRational.from_json(e) for e in obj)
        v = cls(GaussianRational.from_json(e) for e in obj["entries"])
        if "dim" in obj and obj["dim"] != v.dim:
            raise ShapeError(f"vector declares dim {obj['dim']} but has {v.dim} entries")
        return v


def _check_same_dim(u: Vector, v: Vector):
    if u.dim != v.dim:
        raise ShapeError(f"vector dimensions differ: {u.dim} vs {v.dim}")


class Matrix:
    """Immutable dense matrix, stored row-major as a tuple of row tuples."""

    # _nil caches nilpotency_index (-1: not nilpotent), _unip caches is_unipotent
    __slots__ = ("rows", "cols", "_data", "_hash", "_nil", "_unip")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(_row(r) for r in data)
        if not rows or not rows[0]:
            raise ShapeError("matrix must have positive dimensions")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged matrix rows")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols
        self._hash = None
        self._nil = None
        self._unip = None

    @classmethod
    def _from_rows(cls, rows: tuple) -> Matrix:
        m = object.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = len(rows[0])
        m._hash = None
        m._nil = None
        m._unip = None
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return Vector(r[j] for r in self._data)

    def tolist(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self._data]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._data)
        return self._hash

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def is_real(self) -> bool:
        return all(z._im == 0 for r in self._data for z in r)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix._from_rows(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix._from_rows(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        )

    def __neg__(self):
        return Matrix._from_rows(tuple(tuple(-a for a in r) for r in self._data))

    def scale(self, c) -> Matrix:
        c = as_gaussian(c)
        return Matrix._from_rows(tuple(tuple(c * a for a in r) for r in self._data))

    def __mul__(self, c):
        if isinstance(c, (Matrix, Vector)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return multiply(self, other)

    def __pow__(self, k: int) -> Matrix:
        return matpow(self, k)

    def transpose(self) -> Matrix:
        return Matrix._from_rows(tuple(zip(*self._data)))

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self._data)
        return f"Matrix([{body}])"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json() for e in r] for r in self._data],
        }

    @classmethod
    def from_json(cls, obj) -> Matrix:
        if isinstance(obj, list):
            return cls([GaussianRational.from_json(e) for e in r] for r in obj)
        m = cls([GaussianRational.from_json(e) for e in r] for r in obj["entries"])
        if obj.get("rows", m.rows) != m.rows or obj.get("cols", m.cols) != m.cols:
            raise ShapeError("matrix JSON rows/cols disagree with entries")
        return m


def identity(n: int) -> Matrix:
    if n < 1:
        raise ShapeError("identity needs n >= 1")
    return Matrix._from_rows(
        tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
    )


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    if rows < 1 or cols < 1:
        raise ShapeError("zeros needs positive dimensions")
    return Matrix._from_rows(tuple((ZERO,) * cols for _ in range(rows)))


def unit_vector(n: int, j: int) -> Vector:
    """The standard basis vector e_j of length n, 1-based like the usual e_1..e_n."""
    if not 1 <= j <= n:
        raise ShapeError(f"unit vector index {j} outside 1..{n}")
    return Vector(ONE if i == j - 1 else ZERO for i in range(n))


def zero_vector(n: int) -> Vector:
    return Vector([ZERO] * n)


def direct_sum(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0 : c0 + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return Matrix._from_rows(tuple(tuple(r) for r in out))


def _split(rows) -> tuple[list, list, bool, int]:
    # integer numerators over one common denominator; keeps Fraction out of inner loops
    den = 1
    for r in rows:
        for z in r:
            if type(z._re) is not int:
                den = lcm(den, z._re.denominator)
            if type(z._im) is not int:
                den = lcm(den, z._im.denominator)

    def scaled(q):
        if type(q) is int:
            return q * den
        return q.numerator * (den // q.denominator)

    re = [[scaled(z._re) for z in r] for r in rows]
    im = [[scaled(z._im) for z in r] for r in rows]
    real = not any(any(r) for r in im)
    return re, im, real, den


def _mul_raw(a_rows, b_rows, ncols_b):
    # row-times-matrix accumulation skipping zero entries of the left factor
    ar, ai, _, da = _split(a_rows)
    br, bi, b_real, db = _split(b_rows)
    den = da * db
    out = []
    for i in range(len(a_rows)):
        sr = [0] * ncols_b
        si = [0] * ncols_b
        for k, (x, y) in enumerate(zip(ar[i], ai[i])):
            if x == 0 and y == 0:
                continue
            brk, bik = br[k], bi[k]
            if x != 0:
                for j in range(ncols_b):
                    sr[j] += x * brk[j]
                if not b_real:
                    for j in range(ncols_b):
                        si[j] += x * bik[j]
            if y != 0:
                for j in range(ncols_b):
                    si[j] += y * brk[j]
                if not b_real:
                    for j in range(ncols_b):
                        sr[j] -= y * bik[j]
        if den == 1:
            out.append(tuple(GaussianRational._raw(p, q) for p, q in zip(sr, si)))
        else:
            out.append(
                tuple(
                    GaussianRational._raw(_norm(Fraction(p, den)), _norm(Fraction(q, den)))
                    for p, q in zip(sr, si)
                )
            )
    return tuple(out)


def multiply(A: Matrix, B):
    """Exact product ``A @ B`` where B is a Matrix or a Vector."""
    if isinstance(B, Vector):
        if A.cols != B.dim:
            raise ShapeError(f"cannot multiply {A.shape} matrix by vector of dim {B.dim}")
        rows = _mul_raw(A._data, tuple((e,) for e in B.entries), 1)
        return Vector(r[0] for r in rows)
    if isinstance(B, Matrix):
        if A.cols != B.rows:
            raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
        return Matrix._from_rows(_mul_raw(A._data, B._data, B.cols))
    raise TypeError(f"cannot multiply Matrix by {type(B).__name__}")


def _require_square(A: Matrix, what: str):
    if not A.is_square:
        raise ShapeError(f"{what} requires a square matrix, got {A.shape}")


def matpow(A: Matrix, k: int) -> Matrix:
    """``A**k`` by square-and-multiply; ``k = 0`` gives the identity."""
    _require_square(A, "matpow")
    if k < 0:
        raise ValueError("matpow needs k >= 0; use neumann_inverse for negative powers")
    result = identity(A.rows)
    base = A
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def nilpotency_index(M: Matrix) -> int:
    """Smallest m >= 1 with M**m == 0. Raises NotNilpotentError if M**dim != 0."""
    _require_square(M, "nilpotency_index")
    if M._nil is None:
        P = M
        m = 1
        while not P.is_zero():
            if m >= M.rows:
                m = -1
                break
            P = multiply(P, M)
            m += 1
        M._nil = m
    if M._nil < 0:
        raise NotNilpotentError("matrix is not nilpotent")
    return M._nil


def is_nilpotent(M: Matrix) -> bool:
    try:
        nilpotency_index(M)
    except NotNilpotentError:
        return False
    return True


def is_unipotent(A: Matrix) -> bool:
    """True iff (A - I)**dim == 0, i.e. the spectrum of A is {1}."""
    _require_square(A, "is_unipotent")
    if A._unip is None:
        A._unip = is_nilpotent(A - identity(A.rows))
    return A._unip


def neumann_inverse(A: Matrix) -> Matrix:
    """Inverse of a unipotent A as the terminating series sum (I - A)**n."""
    _require_square(A, "neumann_inverse")
    n = A.rows
    N = identity(n) - A
    try:
        m = nilpotency_index(N)
    except NotNilpotentError:
        raise SpectrumError("neumann_inverse: matrix is not unipotent") from None
    total = identity(n)
    P = identity(n)
    for _ in range(1, m):
        P = multiply(P, N)
        total = total + P
    return total


def _row_lcm(row) -> int:
    d = 1
    for z in row:
        for q in (z._re, z._im):
            if type(q) is not int:
                d = lcm(d, q.denominator)
    return d


def _echelon(M: Matrix):
    # fraction-free (Bareiss) forward elimination, first nonzero pivot
    work = []
    for r in M._data:
        d = _row_lcm(r)
        work.append([z * d for z in r] if d != 1 else list(r))
    nrows, ncols = M.rows, M.cols
    prev = ONE
    r = 0
    pivots = []
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if work[i][c]), None)
        if p is None:
            continue
        if p != r:
            work[r], work[p] = work[p], work[r]
        piv = work[r][c]
        for i in range(r + 1, nrows):
            a = work[i][c]
            row_i = work[i]
            row_r = work[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - a * row_r[j]) / prev
            row_i[c] = ZERO
        # entries left of c in rows below r are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return work, pivots


def rank(M: Matrix) -> int:
    return len(_echelon(M)[1])


def rank_and_kernel(M: Matrix) -> tuple[int, list[Vector]]:
    """Exact rank over Q(i) and a basis of the null space."""
    work, pivots = _echelon(M)
    ncols = M.cols
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row_idx in range(len(pivots) - 1, -1, -1):
            pc = pivots[row_idx]
            row = work[row_idx]
            s = ZERO
            for j in range(pc + 1, ncols):
                if row[j] and x[j]:
                    s = s + row[j] * x[j]
            x[pc] = -s / row[pc]
        basis.append(_primitive(x))
    return len(pivots), basis


def _primitive(x: list) -> Vector:
    # clear denominators and fix sign so the first nonzero entry is "positive"
    d = _row_lcm(x)
    if d != 1:
        x = [z * d for z in x]
    lead = next(z for z in x if z)
    if lead._re < 0 or (lead._re == 0 and lead._im < 0):
        x = [-z for z in x]
    return Vector(x)


def vec_norm(v: Vector) -> Fraction:
    """Exact norm: sum of |re| + |im| over all coordinates."""
    return sum((abs1(z) for z in v.entries), Fraction(0))
