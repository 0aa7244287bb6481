"""Exact orbit closure separation for tuples of matrices.

Decides whether the orbit closures of two m-tuples of n x n matrices meet,
under simultaneous conjugation by GL_n and under the left-right action of
SL_n x SL_n, and returns an explicit separating invariant when they do not.
"""

from .conj import SeparationResult, Verdict, separate_conj
from .field import QQ, Field
from .invariants import blow_up, complete_to_invertible, eval_fT, eval_sigma, eval_T, phi, star_action
from .leftright import separate_lr
from .nullcone import NullConeReport, NullConeVerdict, nullcone_test
from .pivot import PivotBasis, pivot_basis
from .tuples import MatTuple
from .witness import ComposedLR, LinDet, SigmaWord, TraceWord, Witness, eval_witness, tilde_lift

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "ComposedLR",
    "Field",
    "LinDet",
    "MatTuple",
    "NullConeReport",
    "NullConeVerdict",
    "PivotBasis",
    "SeparationResult",
    "SigmaWord",
    "TraceWord",
    "Verdict",
    "Witness",
    "blow_up",
    "complete_to_invertible",
    "eval_T",
    "eval_fT",
    "eval_sigma",
    "eval_witness",
    "nullcone_test",
    "phi",
    "pivot_basis",
    "separate_conj",
    "separate_lr",
    "star_action",
    "tilde_lift",
]
