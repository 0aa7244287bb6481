"""Degree and length bounds, evaluated exactly.

Terms of the form ``c * x * log2(y)`` are rounded up with integer
arithmetic: ceil(log2(N)) equals ``(N - 1).bit_length()`` for N >= 1, so
ceil(a * log2(b)) = ceil(log2(b ** a)) never suffers from float rounding.
"""

from __future__ import annotations


def ceil_mul_log2(a: int, b: int) -> int:
    """ceil(a * log2(b)) for integers a >= 0, b >= 1."""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 and b >= 1")
    if a == 0 or b == 1:
        return 0
    return (b**a - 1).bit_length()


def pivot_length_bound(k: int) -> int:
    """Longest possible pivot word for k x k matrices: 2k log2(k) + 4k - 4."""
    if k < 1:
        return 0
    return ceil_mul_log2(2 * k, k) + 4 * k - 4


def sep_conj(n: int, m: int | None = None) -> int:
    """Separating degree for matrix invariants, any characteristic."""
    return ceil_mul_log2(4 * n * n, n) + 12 * n * n - 4 * n


def sep_conj_char0(n: int, m: int | None = None) -> int:
    """Separating degree for matrix invariants in characteristic 0 or p > n."""
    return ceil_mul_log2(4 * n, n) + 12 * n - 4


def sep_lr(n: int, m: int | None = None) -> int:
    return ceil_mul_log2(4 * n**4, n) + 12 * n**4 - 4 * n**3


def sep_lr_char0(n: int, m: int | None = None) -> int:
    return ceil_mul_log2(4 * n**3, n) + 12 * n**3 - 4 * n**2


def sep_lr_reduction(n: int, m: int | None = None) -> int:
    """n^2 times the separating degree of S(n, m n^2), any characteristic."""
    return n * n * sep_conj(n)


def sep_lr_reduction_char0(n: int, m: int | None = None) -> int:
    return n * n * sep_conj_char0(n)


def sep_lr_composed(n: int, m: int | None = None) -> int:
    """Degree guaranteed for a ComposedLR witness: n d times a conjugation witness at size n d, d <= n."""
    return n * n * sep_conj(n * n)


def sep_lr_composed_char0(n: int, m: int | None = None) -> int:
    return n * n * sep_conj_char0(n * n)


def gen_conj_char0(n: int, m: int | None = None) -> int:
    return n * n


def gen_conj(n: int, m: int) -> int:
    return (m + 1) * n**4


def gen_lr(n: int, m: int) -> int:
    return m * n**4


def gen_lr_char0(n: int, m: int | None = None) -> int:
    return n**6


def pivot_length(n: int, m: int | None = None) -> int:
    return pivot_length_bound(n)


def pivot_length_conj(n: int, m: int | None = None) -> int:
    """Pivot length bound at matrix size 2n, as used when separating n x n tuples."""
    return pivot_length_bound(2 * n)


CATALOG = {
    "pivot-length": pivot_length,
    "pivot-length-conj": pivot_length_conj,
    "sep-conj": sep_conj,
    "sep-conj-char0": sep_conj_char0,
    "sep-lr": sep_lr,
    "sep-lr-char0": sep_lr_char0,
    "sep-lr-reduction": sep_lr_reduction,
    "sep-lr-reduction-char0": sep_lr_reduction_char0,
    "sep-lr-composed": sep_lr_composed,
    "sep-lr-composed-char0": sep_lr_composed_char0,
    "gen-conj": gen_conj,
    "gen-conj-char0": gen_conj_char0,
    "gen-lr": gen_lr,
    "gen-lr-char0": gen_lr_char0,
}

NEEDS_M = {"gen-conj", "gen-lr"}


def bound(name: str, n: int, m: int | None = None) -> int:
    try:
        fn = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown bound {name!r}; known: {', '.join(sorted(CATALOG))}") from None
    if n < 1:
        raise ValueError("n must be positive")
    if name in NEEDS_M and m is None:
        raise ValueError(f"bound {name!r} needs m")
    return fn(n, m)


def conj_witness_bound(n: int, characteristic: int) -> int:
    """Degree bound that applies to a witness from the conjugation algorithm."""
    if characteristic == 0 or characteristic > n:
        return sep_conj_char0(n)
    return sep_conj(n)


def lr_witness_bound(n: int, characteristic: int) -> int:
    """Degree bound that applies to any witness from the left-right algorithm.

    LinDet certificates have degree d n <= n^2, below this. The inner
    conjugation step runs on (n d) x (n d) matrices, so the trace regime
    needs characteristic above n^2.
    """
    if characteristic == 0 or characteristic > n * n:
        return sep_lr_composed_char0(n)
    return sep_lr_composed(n)
