"""Exact dense linear algebra over Q and GF(p).

Every function takes the :class:`~orbitsep.field.Field` first and works on
numpy arrays produced by that field. Over small prime fields the work is
delegated to :mod:`orbitsep._kernels`; over Q (and huge primes) it runs on
Python integers and fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import DimensionError, SingularMatrixError
from .field import Field, canonical_rational


def _square(M: np.ndarray) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")
    return M.shape[0]


def matmul(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    if F.uses_kernels:
        return _kernels.active.matmul(A, B, F.p)
    if A.shape[1] == 0:
        return F.zeros((A.shape[0], B.shape[1]))
    if F.is_rational:
        return _rational_matmul(A, B)
    return F.reduce(A.dot(B))


def _common_denominator(M: np.ndarray) -> int:
    den = 1
    for x in M.flat:
        if isinstance(x, Fraction):
            den = math.lcm(den, x.denominator)
    return den


def _as_integers(M: np.ndarray, den: int) -> np.ndarray:
    out = np.empty(M.shape, dtype=object)
    if den == 1:
        out[...] = M
        return out
    for idx, x in np.ndenumerate(M):
        out[idx] = int(x * den)
    return out


def _rational_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    # clear denominators so the O(n^3) inner products run on plain ints
    da, db = _common_denominator(A), _common_denominator(B)
    C = _as_integers(A, da).dot(_as_integers(B, db))
    den = da * db
    if den == 1:
        return C
    out = np.empty(C.shape, dtype=object)
    for idx, x in np.ndenumerate(C):
        out[idx] = canonical_rational(Fraction(x, den))
    return out


def matprod(F: Field, mats, size: int) -> np.ndarray:
    """Left-fold product of a sequence of square matrices; the identity if empty."""
    out = None
    for M in mats:
        out = M if out is None else matmul(F, out, M)
    return F.eye(size) if out is None else out


def add(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return F.reduce(A + B)


def sub(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return F.reduce(A - B)


def scale(F: Field, c, A: np.ndarray) -> np.ndarray:
    c = F(c)
    if F.uses_kernels:
        return (A * c) % F.p
    return F.reduce(A * c)


def trace(F: Field, M: np.ndarray):
    _square(M)
    s = 0
    for i in range(M.shape[0]):
        s = s + M[i, i]
    return F.scalar(s)


def kron(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Kronecker product, block (i, j) equal to ``A[i, j] * B``."""
    p, q = A.shape
    r, s = B.shape
    out = F.zeros((p * r, q * s))
    for i in range(p):
        for j in range(q):
            a = A[i, j]
            if a != 0:
                out[i * r : (i + 1) * r, j * s : (j + 1) * s] = A[i, j] * B
    return F.reduce(out)


def block_diag(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = F.zeros((A.shape[0] + B.shape[0], A.shape[1] + B.shape[1]))
    out[: A.shape[0], : A.shape[1]] = A
    out[A.shape[0] :, A.shape[1] :] = B
    return out


def equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and bool(np.all(A == B))


# ---------------------------------------------------------------------------
# determinant
# ---------------------------------------------------------------------------


def _integer_rows(M: np.ndarray):
    """Scale every row of a rational matrix to integers; return rows and the total scale."""
    rows, total = [], 1
    for row in M:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = math.lcm(den, x.denominator)
        rows.append([int(x * den) for x in row])
        total *= den
    return rows, total


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_mod_python(a: list[list[int]], p: int) -> int:
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def det(F: Field, M: np.ndarray):
    """Exact determinant: fraction-free Bareiss over Q, Gaussian elimination mod p."""
    _square(M)
    if F.uses_kernels:
        return int(_kernels.active.det(M, F.p))
    if F.is_rational:
        rows, total = _integer_rows(M)
        return canonical_rational(Fraction(_bareiss(rows), total))
    return _det_mod_python([[int(x) for x in row] for row in M], F.p)


# ---------------------------------------------------------------------------
# characteristic polynomial and adjugate
# ---------------------------------------------------------------------------


def _berkowitz_object(F: Field, M: np.ndarray) -> list:
    """Coefficients of det(tI - M), leading coefficient first (division free)."""
    n = M.shape[0]
    coeffs = [1]
    for r in range(n):
        col = [1, -M[r, r]]
        sub_m = M[:r, :r]
        row = M[r, :r]
        v = M[:r, r]
        for _ in range(r):
            col.append(-row.dot(v))
            v = F.reduce(sub_m.dot(v))
        if F.p is not None:
            col = [x % F.p for x in col]
        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                acc += col[i - j] * coeffs[j]
            new.append(acc if F.p is None else acc % F.p)
        coeffs = new
    return coeffs


def _berkowitz(F: Field, M: np.ndarray) -> list:
    if F.uses_kernels:
        return [int(x) for x in _kernels.active.berkowitz(M, F.p)]
    return [F.scalar(x) for x in _berkowitz_object(F, M)]


def charpoly(F: Field, M: np.ndarray) -> tuple:
    """Coefficients (sigma_0, ..., sigma_n) of det(Id + t*M).

    Computed with Berkowitz's division-free recurrence, so the result is
    right in every characteristic, including p <= n.
    """
    n = _square(M)
    c = _berkowitz(F, M)
    # det(I + tM) = sum_j (-1)^j c_j t^j when det(tI - M) = sum_j c_j t^(n-j)
    return tuple(F.scalar(c[j] if j % 2 == 0 else F.neg(c[j])) for j in range(n + 1))


def _adjugate_small(F: Field, M: np.ndarray) -> np.ndarray:
    k = M.shape[0]
    if k == 0:
        return F.zeros((0, 0))
    if k == 1:
        return F.eye(1)
    if k == 2:
        a, b, c, d = M[0, 0], M[0, 1], M[1, 0], M[1, 1]
        return F.array([[d, F.neg(b)], [F.neg(c), a]])
    out = F.zeros((3, 3))
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            minor = M[rows[0], cols[0]] * M[rows[1], cols[1]] - M[rows[0], cols[1]] * M[rows[1], cols[0]]
            out[i, j] = minor if (i + j) % 2 == 0 else -minor
    return F.array(out)


def adjugate(F: Field, M: np.ndarray) -> np.ndarray:
    """Adj(M) with M @ Adj(M) == det(M) * Id, valid for singular M too.

    Cofactors for k <= 3; otherwise Cayley-Hamilton on the Berkowitz
    coefficients: Adj(M) = (-1)^(k-1) (M^(k-1) + c_1 M^(k-2) + ... + c_(k-1) Id).
    """
    k = _square(M)
    if k <= 3:
        return _adjugate_small(F, M)
    c = _berkowitz(F, M)
    acc = F.eye(k)
    for j in range(1, k):
        acc = add(F, matmul(F, acc, M), scale(F, c[j], F.eye(k)))
    return acc if (k - 1) % 2 == 0 else scale(F, -1, acc)


# ---------------------------------------------------------------------------
# inverse
# ---------------------------------------------------------------------------


def inverse(F: Field, M: np.ndarray) -> np.ndarray:
    n = _square(M)
    if F.uses_kernels:
        ok, inv = _kernels.active.inverse(M, F.p)
        if not ok:
            raise SingularMatrixError("matrix is singular (det = 0)", det=0)
        return inv
    a = [[x for x in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular (det = 0)", det=0)
        a[c], a[piv] = a[piv], a[c]
        inv_p = F.inv(a[c][c])
        a[c] = [F.mul(x, inv_p) for x in a[c]]
        for r in range(n):
            f = a[r][c]
            if r != c and f != 0:
                a[r] = [F.add(x, F.neg(F.mul(f, y))) for x, y in zip(a[r], a[c])]
    return F.array([row[n:] for row in a])


# ---------------------------------------------------------------------------
# incremental echelon form
# ---------------------------------------------------------------------------


class Echelon:
    """Echelon basis of vectors in F^dim, grown one vector at a time.

    Each stored row has its pivot at its first nonzero coordinate and is zero
    at the pivots of every earlier row, so reducing a vector against the rows
    in insertion order clears all pivot coordinates. Over Q rows are kept as
    primitive integer vectors (fraction free); the residual is then exact up
    to a nonzero scalar, which is all the independence test needs.
    """

    def __init__(self, F: Field, dim: int):
        self.field = F
        self.dim = dim
        self.count = 0
        if F.uses_kernels:
            self._rows = np.zeros((max(dim, 1), dim), dtype=np.int64)
            self._pivots = np.zeros(max(dim, 1), dtype=np.int64)
        else:
            self._rows = []
            self._pivots = []

    def __len__(self):
        return self.count

    @property
    def pivots(self) -> list[int]:
        return [int(c) for c in self._pivots[: self.count]]

    def _prepare(self, vec):
        vec = np.asarray(vec).ravel()
        if vec.shape[0] != self.dim:
            raise DimensionError(f"vector of length {vec.shape[0]} against echelon of dimension {self.dim}")
        if self.field.is_rational:
            den = 1
            for x in vec:
                if isinstance(x, Fraction):
                    den = math.lcm(den, x.denominator)
            out = np.empty(self.dim, dtype=object)
            for i, x in enumerate(vec):
                out[i] = int(x * den)
            return out
        return vec

    def reduce(self, vec) -> np.ndarray:
        """Residual of ``vec`` after elimination against the stored rows."""
        F = self.field
        v = self._prepare(vec)
        if F.uses_kernels:
            return _kernels.active.reduce(self._rows, self._pivots, self.count, v, F.p)
        for row, c in zip(self._rows, self._pivots):
            f = v[c]
            if f == 0:
                continue
            if F.is_rational:
                v = row[c] * v - f * row
                g = math.gcd(*v.tolist())
                if g > 1:
                    v = v // g
            else:
                v = (v - f * row) % F.p
        return v

    def insert(self, vec) -> tuple[np.ndarray, bool]:
        """Reduce ``vec``; if it is independent, add it. Returns (residual, independent)."""
        F = self.field
        res = self.reduce(vec)
        nz = np.flatnonzero(res != 0)
        if nz.size == 0:
            return res, False
        c = int(nz[0])
        if F.uses_kernels:
            row = res * pow(int(res[c]), -1, F.p) % F.p
            self._rows[self.count] = row
            self._pivots[self.count] = c
        elif F.is_rational:
            self._rows.append(res)
            self._pivots.append(c)
        else:
            self._rows.append(res * pow(int(res[c]), -1, F.p) % F.p)
            self._pivots.append(c)
        self.count += 1
        return res, True


def rank_and_reduce(F: Field, M: np.ndarray, basis: Echelon) -> tuple[np.ndarray, bool]:
    """Reduce the flattened matrix ``M`` against ``basis``, extending it if independent."""
    if basis.field != F:
        raise DimensionError("echelon state belongs to a different field")
    return basis.insert(M.ravel())
