"""Hot GF(p) kernels on int64 arrays, for primes p < 2**31.

Two interchangeable backends are provided:

* ``numba`` -- explicit loops compiled with ``@njit``;
* ``numpy`` -- vectorised numpy code, no compilation.

The numba backend is used when numba imports and the environment variable
``ORBITSEP_DISABLE_NUMBA`` is unset (or ``0``). ``set_backend`` switches at
runtime; the benchmark in ``benchmarks/`` uses it to compare the two.

All inputs hold canonical residues in ``[0, p)`` and so do all outputs.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_DISABLED = os.environ.get("ORBITSEP_DISABLE_NUMBA", "").strip().lower() not in {"", "0", "false", "no"}


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------


def _np_matmul(a, b, p):
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # each product < p**2 < 2**62; reduce before summing
    return ((a[:, :, None] * b[None, :, :]) % p).sum(axis=1) % p


def _np_matvec(a, v, p):
    if a.shape[1] == 0:
        return np.zeros(a.shape[0], dtype=np.int64)
    return ((a * v[None, :]) % p).sum(axis=1) % p


def _np_det(a, p):
    m = a.copy()
    n = m.shape[0]
    det = 1
    for c in range(n):
        nz = np.flatnonzero(m[c:, c])
        if nz.size == 0:
            return 0
        piv = c + nz[0]
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            det = (p - det) % p
        pv = int(m[c, c])
        det = det * pv % p
        if c + 1 < n:
            f = m[c + 1 :, c] * pow(pv, -1, p) % p
            m[c + 1 :, c:] = (m[c + 1 :, c:] - (f[:, None] * m[c, c:][None, :]) % p) % p
    return det


def _np_inverse(a, p):
    n = a.shape[0]
    m = np.concatenate([a.copy(), np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.flatnonzero(m[c:, c])
        if nz.size == 0:
            return False, np.zeros((n, n), dtype=np.int64)
        piv = c + nz[0]
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
        m[c] = m[c] * pow(int(m[c, c]), -1, p) % p
        f = m[:, c].copy()
        f[c] = 0
        m = (m - (f[:, None] * m[c][None, :]) % p) % p
    return True, m[:, n:].copy()


def _np_berkowitz(a, p):
    n = a.shape[0]
    coeffs = np.zeros(n + 1, dtype=np.int64)
    coeffs[0] = 1
    for r in range(n):
        col = np.zeros(r + 2, dtype=np.int64)
        col[0] = 1
        col[1] = (-a[r, r]) % p
        sub = a[:r, :r]
        row = a[r, :r]
        v = a[:r, r].copy()
        for k in range(r):
            col[k + 2] = (-(((row * v) % p).sum() % p)) % p
            v = _np_matvec(sub, v, p)
        new = np.zeros(n + 1, dtype=np.int64)
        for i in range(r + 2):
            j = np.arange(min(i, r) + 1)
            new[i] = ((col[i - j] * coeffs[j]) % p).sum() % p
        coeffs = new
    return coeffs


def _np_reduce(rows, pivots, count, v, p):
    out = v.copy()
    for r in range(count):
        f = out[pivots[r]]
        if f:
            out = (out - (f * rows[r]) % p) % p
    return out


numpy_backend = SimpleNamespace(
    name="numpy",
    matmul=_np_matmul,
    det=_np_det,
    inverse=_np_inverse,
    berkowitz=_np_berkowitz,
    reduce=_np_reduce,
)


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if numba is not None:
    njit = numba.njit(cache=True, nogil=True)

    @njit
    def _nb_inv_scalar(a, p):
        t, new_t = 0, 1
        r, new_r = p, a
        while new_r != 0:
            q = r // new_r
            t, new_t = new_t, t - q * new_t
            r, new_r = new_r, r - q * new_r
        if t < 0:
            t += p
        return t

    @njit
    def _nb_matmul(a, b, p):
        n, k = a.shape
        m = b.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for l in range(k):
                ail = a[i, l]
                if ail == 0:
                    continue
                for j in range(m):
                    out[i, j] = (out[i, j] + ail * b[l, j]) % p
        return out

    @njit
    def _nb_det(a, p):
        m = a.copy()
        n = m.shape[0]
        det = 1
        for c in range(n):
            piv = -1
            for r in range(c, n):
                if m[r, c] != 0:
                    piv = r
                    break
            if piv < 0:
                return 0
            if piv != c:
                for j in range(n):
                    tmp = m[c, j]
                    m[c, j] = m[piv, j]
                    m[piv, j] = tmp
                det = (p - det) % p
            det = det * m[c, c] % p
            inv = _nb_inv_scalar(m[c, c], p)
            for r in range(c + 1, n):
                f = m[r, c] * inv % p
                if f != 0:
                    for j in range(c, n):
                        m[r, j] = (m[r, j] - f * m[c, j]) % p
        return det

    @njit
    def _nb_inverse(a, p):
        n = a.shape[0]
        m = np.zeros((n, 2 * n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                m[i, j] = a[i, j]
            m[i, n + i] = 1
        for c in range(n):
            piv = -1
            for r in range(c, n):
                if m[r, c] != 0:
                    piv = r
                    break
            if piv < 0:
                return False, np.zeros((n, n), dtype=np.int64)
            if piv != c:
                for j in range(2 * n):
                    tmp = m[c, j]
                    m[c, j] = m[piv, j]
                    m[piv, j] = tmp
            inv = _nb_inv_scalar(m[c, c], p)
            for j in range(2 * n):
                m[c, j] = m[c, j] * inv % p
            for r in range(n):
                if r != c:
                    f = m[r, c]
                    if f != 0:
                        for j in range(2 * n):
                            m[r, j] = (m[r, j] - f * m[c, j]) % p
        return True, m[:, n:].copy()

    @njit
    def _nb_berkowitz(a, p):
        n = a.shape[0]
        coeffs = np.zeros(n + 1, dtype=np.int64)
        coeffs[0] = 1
        for r in range(n):
            col = np.zeros(r + 2, dtype=np.int64)
            col[0] = 1
            col[1] = (p - a[r, r]) % p
            v = np.empty(r, dtype=np.int64)
            for i in range(r):
                v[i] = a[i, r]
            for k in range(r):
                s = 0
                for j in range(r):
                    s = (s + a[r, j] * v[j]) % p
                col[k + 2] = (p - s) % p
                w = np.zeros(r, dtype=np.int64)
                for i in range(r):
                    acc = 0
                    for j in range(r):
                        acc = (acc + a[i, j] * v[j]) % p
                    w[i] = acc
                v = w
            new = np.zeros(n + 1, dtype=np.int64)
            for i in range(r + 2):
                acc = 0
                for j in range(min(i, r) + 1):
                    acc = (acc + col[i - j] * coeffs[j]) % p
                new[i] = acc
            coeffs = new
        return coeffs

    @njit
    def _nb_reduce(rows, pivots, count, v, p):
        out = v.copy()
        size = out.shape[0]
        for r in range(count):
            c = pivots[r]
            f = out[c]
            if f != 0:
                for j in range(c, size):
                    out[j] = (out[j] - f * rows[r, j]) % p
        return out

    numba_backend = SimpleNamespace(
        name="numba",
        matmul=_nb_matmul,
        det=_nb_det,
        inverse=_nb_inverse,
        berkowitz=_nb_berkowitz,
        reduce=_nb_reduce,
    )
else:  # pragma: no cover
    numba_backend = None


BACKENDS = {"numpy": numpy_backend}
if numba_backend is not None:
    BACKENDS["numba"] = numba_backend

active = numpy_backend if (_DISABLED or numba_backend is None) else numba_backend


def set_backend(name: str):
    """Select the kernel backend (``"numba"`` or ``"numpy"``) for this process."""
    global active
    try:
        active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}") from None
    return active


@contextmanager
def use_backend(name: str):
    previous = active.name
    set_backend(name)
    try:
        yield active
    finally:
        set_backend(previous)


def warmup():
    """Trigger compilation of every kernel on a tiny input."""
    a = np.array([[1, 2], [3, 4]], dtype=np.int64)
    for be in BACKENDS.values():
        be.matmul(a, a, 7)
        be.det(a, 7)
        be.inverse(a, 7)
        be.berkowitz(a, 7)
        be.reduce(a, np.array([0, 1], dtype=np.int64), 1, a[0], 7)
