"""Separating invariants as self-contained, serialisable objects.

A witness knows the shape of the tuples it applies to (field, n, m), can be
evaluated exactly, reports its degree as a polynomial in the matrix entries,
and round-trips through JSON so that a third party can re-check a
separation claim without any other state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from . import linalg
from .errors import DimensionError, FieldMismatchError
from .field import Field
from .invariants import blow_up, eval_fT, eval_sigma, eval_T, star_action
from .tuples import MatTuple
from .words import Word, check_word, format_word


@dataclass(frozen=True, eq=False)
class Witness:
    field: Field
    n: int
    m: int

    variant: ClassVar[str] = ""

    @property
    def degree(self) -> int:
        raise NotImplementedError

    def _evaluate(self, X: MatTuple):
        raise NotImplementedError

    def evaluate(self, X: MatTuple):
        if X.field != self.field:
            raise FieldMismatchError(f"witness is over {self.field}, tuple over {X.field}")
        if X.n != self.n or X.m != self.m:
            raise DimensionError(
                f"witness expects {self.m}-tuples of {self.n}x{self.n} matrices, "
                f"got {X.m}-tuple of {X.n}x{X.n}"
            )
        return self._evaluate(X)

    __call__ = evaluate

    def _fields_json(self) -> dict:
        return {}

    def to_json(self) -> dict:
        out = {
            "variant": self.variant,
            "field": self.field.to_json(),
            "n": self.n,
            "m": self.m,
            "degree": self.degree,
        }
        out.update(self._fields_json())
        return out

    @staticmethod
    def from_json(obj: dict) -> Witness:
        return witness_from_json(obj)


@dataclass(frozen=True, eq=False)
class TraceWord(Witness):
    """X -> Tr(X_w)."""

    word: Word = ()
    variant: ClassVar[str] = "TraceWord"

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(i) for i in self.word))
        check_word(self.word, self.m)

    @property
    def degree(self) -> int:
        return len(self.word)

    def _evaluate(self, X):
        return eval_T(self.word, X)

    def _fields_json(self):
        return {"word": list(self.word)}

    def __str__(self):
        return f"Tr(X_{format_word(self.word)})"


@dataclass(frozen=True, eq=False)
class SigmaWord(Witness):
    """X -> sigma_j(X_w), the j-th coefficient of det(Id + t X_w)."""

    j: int = 1
    word: Word = ()
    variant: ClassVar[str] = "SigmaWord"

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(i) for i in self.word))
        check_word(self.word, self.m)
        if not 1 <= self.j <= self.n:
            raise DimensionError(f"coefficient index {self.j} outside 1..{self.n}")

    @property
    def degree(self) -> int:
        return self.j * len(self.word)

    def _evaluate(self, X):
        return eval_sigma(self.j, self.word, X)

    def _fields_json(self):
        return {"j": self.j, "word": list(self.word)}

    def __str__(self):
        return f"sigma_{self.j}(X_{format_word(self.word)})"


@dataclass(frozen=True, eq=False)
class LinDet(Witness):
    """X -> det(T_1 (x) X_1 + ... + T_m (x) X_m)."""

    T: MatTuple | None = None
    variant: ClassVar[str] = "LinDet"

    def __post_init__(self):
        if self.T is None or self.T.m != self.m or self.T.field != self.field:
            raise DimensionError("LinDet needs an m-tuple T over the witness field")

    @property
    def d(self) -> int:
        return self.T.n

    @property
    def degree(self) -> int:
        return self.d * self.n

    def _evaluate(self, X):
        return eval_fT(self.T, X)

    def _fields_json(self):
        return {"d": self.d, "T": self.T.to_lists()}

    def __str__(self):
        return f"f_T with T in Mat_{self.d}^{self.m}"


@dataclass(frozen=True, eq=False)
class ComposedLR(Witness):
    """A conjugation invariant pulled back to a left-right semi-invariant.

    With W = P * X^[d] (the star action on the blow-up), the value is
    ``inner(Adj(W_1) W_2, ..., Adj(W_1) W_{md^2})``. Using the adjugate
    instead of the inverse keeps this a polynomial in X of degree
    ``inner.degree * n * d``. With P = Id and d = 1 this is exactly the
    lift f -> f~ that inverts X -> (Id, X).
    """

    P: np.ndarray | None = None
    d: int = 1
    inner: Witness | None = None
    variant: ClassVar[str] = "ComposedLR"

    def __post_init__(self):
        size = self.m * self.d * self.d
        if self.P is None or self.P.shape != (size, size):
            raise DimensionError(f"P must be {size}x{size}")
        if self.inner is None:
            raise DimensionError("ComposedLR needs an inner witness")
        if self.inner.n != self.n * self.d or self.inner.m != size - 1 or self.inner.field != self.field:
            raise DimensionError(
                f"inner witness must act on {size - 1}-tuples of {self.n * self.d}x{self.n * self.d} matrices"
            )
        P = self.P.copy()
        P.flags.writeable = False
        object.__setattr__(self, "P", P)

    @property
    def degree(self) -> int:
        return self.inner.degree * self.n * self.d

    def reduced_tuple(self, X: MatTuple) -> MatTuple:
        """(Adj(W_1) W_2, ..., Adj(W_1) W_k) for W = P * X^[d]."""
        F = self.field
        W = star_action(self.P, blow_up(X, self.d), check=False)
        adj = linalg.adjugate(F, W[0])
        return MatTuple(F, W.n, tuple(linalg.matmul(F, adj, Wi) for Wi in W.mats[1:]))

    def _evaluate(self, X):
        return self.inner.evaluate(self.reduced_tuple(X))

    def _fields_json(self):
        return {"d": self.d, "P": self.field.to_lists(self.P), "inner": self.inner.to_json()}

    def __str__(self):
        return f"composed[d={self.d}]({self.inner})"


VARIANTS = {cls.variant: cls for cls in (TraceWord, SigmaWord, LinDet, ComposedLR)}


def eval_witness(W: Witness, X: MatTuple):
    return W.evaluate(X)


def tilde_lift(f: Witness) -> ComposedLR:
    """Lift an invariant f of m-tuples to f~(X_1..X_{m+1}) = f(Adj(X_1) X_2, ..., Adj(X_1) X_{m+1})."""
    if not isinstance(f, (TraceWord, SigmaWord)):
        raise TypeError(f"cannot lift a {type(f).__name__} witness; need TraceWord or SigmaWord")
    F = f.field
    return ComposedLR(field=F, n=f.n, m=f.m + 1, P=F.eye(f.m + 1), d=1, inner=f)


def witness_from_json(obj: dict) -> Witness:
    if not isinstance(obj, dict):
        raise ValueError("witness JSON must be an object")
    try:
        variant = obj["variant"]
        VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown or missing witness variant {obj.get('variant')!r}") from None
    try:
        F = Field.from_json(obj["field"])
        n, m = int(obj["n"]), int(obj["m"])
        if variant == "TraceWord":
            W = TraceWord(F, n, m, word=tuple(obj["word"]))
        elif variant == "SigmaWord":
            W = SigmaWord(F, n, m, j=int(obj["j"]), word=tuple(obj["word"]))
        elif variant == "LinDet":
            d = int(obj["d"])
            T = MatTuple.of(F, [F.array([[F.parse_scalar(x) for x in row] for row in M]) for M in obj["T"]], n=d)
            W = LinDet(F, n, m, T=T)
        else:
            P = F.array([[F.parse_scalar(x) for x in row] for row in obj["P"]])
            W = ComposedLR(F, n, m, P=P, d=int(obj["d"]), inner=witness_from_json(obj["inner"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed {variant} witness: {exc}") from None
    if "degree" in obj and int(obj["degree"]) != W.degree:
        raise ValueError(f"recorded degree {obj['degree']} does not match computed degree {W.degree}")
    return W
