"""Evaluation of matrix invariants and semi-invariants, and the maps between tuple spaces."""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionError, FieldMismatchError, SingularMatrixError
from .tuples import MatTuple
from .words import Word, eval_word


def eval_T(w: Word, X: MatTuple):
    """Trace of the word product X_w."""
    return linalg.trace(X.field, eval_word(X, w))


def eval_sigma(j: int, w: Word, X: MatTuple):
    """j-th coefficient of det(Id + t X_w)."""
    if not 1 <= j <= X.n:
        raise DimensionError(f"coefficient index {j} outside 1..{X.n}")
    return linalg.charpoly(X.field, eval_word(X, w))[j]


def linear_pencil(T: MatTuple, X: MatTuple) -> np.ndarray:
    """The dn x dn matrix T_1 (x) X_1 + ... + T_m (x) X_m."""
    if T.m != X.m:
        raise DimensionError(f"T has {T.m} components but X has {X.m}")
    if T.field != X.field:
        raise FieldMismatchError("T and X live over different fields")
    F = X.field
    out = F.zeros((T.n * X.n, T.n * X.n))
    for Tk, Xk in zip(T, X):
        out = out + linalg.kron(F, Tk, Xk)
    return F.reduce(out)


def eval_fT(T: MatTuple, X: MatTuple):
    """f_T(X) = det(sum_k T_k (x) X_k)."""
    return linalg.det(X.field, linear_pencil(T, X))


def blow_up(X: MatTuple, d: int) -> MatTuple:
    """X^[d] = (X_i (x) E_{j,k}) over (i, j, k) in lexicographic order."""
    if d < 1:
        raise ValueError("blow-up size d must be at least 1")
    F = X.field
    mats = [linalg.kron(F, Xi, F.unit(d, j, k)) for Xi in X for j in range(d) for k in range(d)]
    return MatTuple(F, X.n * d, tuple(mats))


def star_action(P: np.ndarray, X: MatTuple, check: bool = True) -> MatTuple:
    """GL_m acting on the tuple index: the i-th entry is sum_j P[i, j] X_j."""
    F = X.field
    if P.shape != (X.m, X.m):
        raise DimensionError(f"P must be {X.m}x{X.m}, got {P.shape}")
    if check and X.m and linalg.det(F, P) == 0:
        raise SingularMatrixError("star action needs an invertible matrix", det=0)
    mats = []
    for i in range(X.m):
        acc = F.zeros((X.n, X.n))
        for j in range(X.m):
            if P[i, j] != 0:
                acc = F.reduce(acc + P[i, j] * X[j])
        mats.append(acc)
    return MatTuple(F, X.n, tuple(mats))


def phi(X: MatTuple) -> MatTuple:
    """(X_1, ..., X_m) -> (Id, X_1, ..., X_m)."""
    return MatTuple(X.field, X.n, (X.field.eye(X.n),) + X.mats)


def complete_to_invertible(F, v) -> np.ndarray:
    """An invertible matrix whose first row is ``v``.

    With j the first index where v is nonzero, the remaining rows are the
    standard basis vectors e_i, i != j, in increasing order; the determinant
    is +-v_j.
    """
    v = F.vector(v)
    nz = np.flatnonzero(v != 0)
    if nz.size == 0:
        raise ValueError("cannot complete the zero vector to an invertible matrix")
    j = int(nz[0])
    m = v.shape[0]
    P = F.zeros((m, m))
    P[0] = v
    row = 1
    for i in range(m):
        if i != j:
            P[row, i] = 1
            row += 1
    return P
