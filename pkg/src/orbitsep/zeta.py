"""The map zeta turning the left-right action into conjugation.

For T in Mat_{d,d}^m let L_T(X) = sum_k T_k (x) X_k and M_T(X) = Adj(L_T(X)),
both read as d x d grids of n x n blocks. The products
X_{i,j,k} = X_k M_{i,j}(X) transform by P (.) P^-1 when X transforms by
(P, Q^-1) in SL_n x SL_n, so conjugation invariants of zeta(X) are
left-right semi-invariants of X.
"""

from __future__ import annotations

import random

import numpy as np

from . import linalg
from .errors import DimensionError
from .invariants import eval_fT, linear_pencil
from .sampling import random_transvection_pair, random_tuple
from .tuples import MatTuple, left_right


def L_T(T: MatTuple, X: MatTuple) -> np.ndarray:
    return linear_pencil(T, X)


def M_T(T: MatTuple, X: MatTuple) -> np.ndarray:
    return linalg.adjugate(X.field, L_T(T, X))


def block(M: np.ndarray, i: int, j: int, n: int) -> np.ndarray:
    """The (i, j) block (0-based) of size n x n."""
    return M[i * n : (i + 1) * n, j * n : (j + 1) * n]


def zeta(T: MatTuple, X: MatTuple) -> MatTuple:
    """(X_k M_{i,j}(X)) over (i, j, k) in lexicographic order."""
    F, n, d = X.field, X.n, T.n
    M = M_T(T, X)
    mats = [
        linalg.matmul(F, X[k], block(M, i, j, n)) for i in range(d) for j in range(d) for k in range(X.m)
    ]
    return MatTuple(F, n, tuple(mats))


def zeta_index(i: int, j: int, k: int, d: int, m: int) -> int:
    """Position of X_{i,j,k} (0-based indices) inside zeta(X)."""
    return (i * d + j) * m + k


def build_N(U: MatTuple, T: MatTuple, X: MatTuple):
    """N(X) = (sum_k U_k (x) X_k)(Id_c (x) M_T(X)) and its coefficient tensor.

    ``U`` holds dc x dc matrices for some block count c. Returns ``(N, lam)``
    where ``lam[p, q, i, j, k]`` is the coefficient of X_{i,j,k} in the
    (p, q) block of N, so that N = N_from_zeta(lam, zeta(T, X)).
    """
    F, _n, d, m = X.field, X.n, T.n, X.m
    if U.m != m or T.m != m:
        raise DimensionError("U, T and X must have the same number of components")
    if U.n % d:
        raise DimensionError(f"size of U ({U.n}) must be a multiple of d = {d}")
    c = U.n // d
    left = linear_pencil(U, X)
    right = linalg.kron(F, F.eye(c), M_T(T, X))
    N = linalg.matmul(F, left, right)

    # block (p, q) = sum_r L_{p,r} R_{r,q}; R_{r,q} = M_{i,j} when r = a*d + i, q = a*d + j
    dc = d * c
    lam = np.empty((dc, dc, d, d, m), dtype=object)
    lam.fill(0)
    for p in range(dc):
        for q in range(dc):
            a, j = divmod(q, d)
            for i in range(d):
                r = a * d + i
                for k in range(m):
                    lam[p, q, i, j, k] = F.scalar(U[k][p, r])
    return N, lam


def N_from_zeta(lam: np.ndarray, Z: MatTuple, d: int) -> np.ndarray:
    """Assemble the block matrix with (p, q) block sum lam[p,q,i,j,k] Z_{i,j,k}."""
    F, n = Z.field, Z.n
    dc = lam.shape[0]
    m = lam.shape[4]
    if Z.m != m * d * d:
        raise DimensionError(f"expected {m * d * d} components, got {Z.m}")
    out = F.zeros((dc * n, dc * n))
    for p in range(dc):
        for q in range(dc):
            acc = F.zeros((n, n))
            for i in range(d):
                for j in range(d):
                    for k in range(m):
                        c = lam[p, q, i, j, k]
                        if c != 0:
                            acc = F.reduce(acc + F(c) * Z[zeta_index(i, j, k, d, m)])
            out[p * n : (p + 1) * n, q * n : (q + 1) * n] = acc
    return out


def g_of_zeta(lam: np.ndarray, Z: MatTuple, d: int):
    """The conjugation invariant g(Z) = det(N_Z)."""
    return linalg.det(Z.field, N_from_zeta(lam, Z, d))


ZETA_CHECKS = ("block_equivariance", "zeta_equivariance", "det_N_factorization", "g_zeta_equals_det_N")


def property_run(F, n: int, d: int, c: int, samples: int = 50, m: int = 2, seed=0) -> dict:
    """Check the zeta identities on random samples; returns pass counts per identity.

    For sigma = (P, Q^-1) with det P = det Q = 1 (so sigma X = P X Q):
    M_{i,j}(sigma X) = Q^-1 M_{i,j}(X) P^-1, zeta(sigma X) = P zeta(X) P^-1,
    det N(X) = f_U(X) det(M_T(X))^c, and det(N_{zeta(X)}) = det N(X).
    """
    rng = random.Random(seed)
    passed = dict.fromkeys(ZETA_CHECKS, 0)
    for _ in range(samples):
        X = random_tuple(F, n, m, rng)
        T = random_tuple(F, d, m, rng)
        U = random_tuple(F, d * c, m, rng)
        P, P_inv = random_transvection_pair(F, n, seed=rng)
        Q, Q_inv = random_transvection_pair(F, n, seed=rng)
        sX = left_right(X, P, Q_inv, Q_inv=Q)

        M, sM = M_T(T, X), M_T(T, sX)
        ok = all(
            linalg.equal(
                block(sM, i, j, n),
                linalg.matmul(F, linalg.matmul(F, Q_inv, block(M, i, j, n)), P_inv),
            )
            for i in range(d)
            for j in range(d)
        )
        passed["block_equivariance"] += ok

        Z, sZ = zeta(T, X), zeta(T, sX)
        ok = all(
            linalg.equal(sz, linalg.matmul(F, linalg.matmul(F, P, z), P_inv)) for z, sz in zip(Z, sZ)
        )
        passed["zeta_equivariance"] += ok

        N, lam = build_N(U, T, X)
        det_N = linalg.det(F, N)
        passed["det_N_factorization"] += det_N == F.mul(eval_fT(U, X), F.power(linalg.det(F, M), c))
        passed["g_zeta_equals_det_N"] += g_of_zeta(lam, Z, d) == det_N
    return passed
