"""Ground fields: the rationals and prime fields GF(p).

Scalars are plain Python objects. Over Q an element is an ``int`` when it is
integral and a ``fractions.Fraction`` otherwise (Fraction already keeps lowest
terms with a positive denominator). Over GF(p) an element is an ``int`` in
``[0, p)``.

Matrices are numpy arrays. Rational matrices and matrices over very large
primes use ``dtype=object``; for ``p < 2**31`` they are ``int64`` so the
compiled kernels in :mod:`orbitsep._kernels` can work on them directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .errors import DimensionError

# p * p must fit into a signed 64-bit integer
SMALL_PRIME_LIMIT = 2**31


def canonical_rational(q):
    """Return ``q`` as an ``int`` if integral, else as a reduced ``Fraction``."""
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    if isinstance(q, Integral):
        return int(q)
    return canonical_rational(Fraction(q))


@dataclass(frozen=True)
class Field:
    """Either Q (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, Integral) or isinstance(self.p, bool):
                raise ValueError(f"field characteristic must be an integer, got {self.p!r}")
            from sympy import isprime

            if not isprime(int(self.p)):
                raise ValueError(f"{self.p} is not prime")
            object.__setattr__(self, "p", int(self.p))

    @classmethod
    def rational(cls) -> Field:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``"Q"``, ``"GF(101)"`` or a bare prime like ``"101"``."""
        t = text.strip()
        if t.upper() in {"Q", "QQ", "RATIONAL"}:
            return cls(None)
        if t.upper().startswith("GF(") and t.endswith(")"):
            t = t[3:-1]
        try:
            return cls(int(t))
        except ValueError as exc:
            raise ValueError(f"cannot parse field {text!r}: {exc}") from None

    # -- basic properties --------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def uses_kernels(self) -> bool:
        """True when matrices are int64 and go through the compiled kernels."""
        return self.p is not None and self.p < SMALL_PRIME_LIMIT

    @property
    def dtype(self):
        return np.int64 if self.uses_kernels else object

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    # -- scalars -----------------------------------------------------------

    def __call__(self, x):
        """Coerce an int, Fraction, numpy integer or literal string into the field."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if isinstance(x, bool):
            x = int(x)
        if self.p is None:
            if isinstance(x, (Integral, Rational)):
                return canonical_rational(x)
            raise TypeError(f"cannot coerce {x!r} to an exact rational")
        if isinstance(x, Integral):
            return int(x) % self.p
        if isinstance(x, Rational):
            num, den = x.numerator, x.denominator
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes in {self}")
            return num * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} to {self}")

    def scalar(self, x):
        """Normalise an array entry (e.g. ``np.int64``) to the canonical scalar."""
        if self.p is None:
            return canonical_rational(x)
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return canonical_rational(1 / Fraction(x))
        return pow(int(x), -1, self.p)

    def neg(self, x):
        return -x if self.p is None else (-int(x)) % self.p

    def mul(self, x, y):
        return canonical_rational(x * y) if self.p is None else int(x) * int(y) % self.p

    def add(self, x, y):
        return canonical_rational(x + y) if self.p is None else (int(x) + int(y)) % self.p

    def power(self, x, k: int):
        if self.p is None:
            return canonical_rational(Fraction(x) ** k)
        return pow(int(x), k, self.p)

    def parse_scalar(self, s):
        """Parse a scalar literal; over GF(p) only canonical residues are accepted."""
        if isinstance(s, bool) or isinstance(s, float):
            raise ValueError(f"scalar literal {s!r} must be an integer or a string")
        if self.p is None:
            try:
                return canonical_rational(Fraction(s))
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise ValueError(f"invalid rational literal {s!r}: {exc}") from None
        try:
            v = int(s)
        except (ValueError, TypeError):
            raise ValueError(f"invalid literal {s!r} for {self}") from None
        if not 0 <= v < self.p:
            raise ValueError(f"scalar {v} out of range for {self} (expected 0 <= x < {self.p})")
        return v

    def format_scalar(self, x) -> str:
        x = self.scalar(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)

    # -- arrays ------------------------------------------------------------

    def array(self, rows) -> np.ndarray:
        """Build a 2-d field matrix from nested sequences (or an existing array)."""
        if isinstance(rows, np.ndarray) and rows.ndim == 2:
            data = rows.tolist()
        else:
            data = [list(r) for r in rows]
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged matrix rows")
        out = np.empty((nrows, ncols), dtype=self.dtype)
        for i, r in enumerate(data):
            for j, x in enumerate(r):
                out[i, j] = self(x)
        return out

    def vector(self, values) -> np.ndarray:
        values = list(values)
        out = np.empty(len(values), dtype=self.dtype)
        for i, x in enumerate(values):
            out[i] = self(x)
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.uses_kernels:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(0)
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = 1
        return out

    def unit(self, n: int, i: int, j: int) -> np.ndarray:
        """The matrix unit E_{i,j} (0-based indices)."""
        out = self.zeros((n, n))
        out[i, j] = 1
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Bring an array produced by ring operations back to canonical form."""
        if self.p is None:
            return arr
        return arr % self.p

    def to_lists(self, M: np.ndarray) -> list:
        return [[self.format_scalar(x) for x in row] for row in M]

    def to_json(self) -> dict:
        if self.p is None:
            return {"kind": "rational"}
        return {"kind": "prime", "p": self.p}

    @classmethod
    def from_json(cls, obj) -> Field:
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError(f"malformed field spec {obj!r}")
        if obj["kind"] == "rational":
            return cls(None)
        if obj["kind"] == "prime":
            return cls(obj.get("p"))
        raise ValueError(f"unknown field kind {obj['kind']!r}")


QQ = Field(None)
