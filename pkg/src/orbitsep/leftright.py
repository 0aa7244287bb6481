"""Orbit closure separation for the left-right action of SL_n x SL_n.

Three steps:

1. Null-cone tests on A and B. Both inside means equivalent; if only one is
   outside, its certificate f_T usually separates the pair already.
2. For d in {n-1, n}, a certificate T(d) with f_{T(d)} nonzero on the
   outside tuple. Different values on A and B separate.
3. Otherwise, for each d, make T(d) the first row of an invertible P, pass
   to U = P * A^[d] and V = P * B^[d] (so det U_1 = det V_1 != 0), and
   compare (U_1^-1 U_2, ...) with (V_1^-1 V_2, ...) under conjugation. A
   conjugation witness for some d becomes a ComposedLR witness for (A, B);
   if neither d separates, A and B are equivalent.
"""

from __future__ import annotations

from . import linalg
from .conj import SeparationResult, Verdict, separate_conj, verified
from .errors import CertificateSearchError
from .invariants import blow_up, complete_to_invertible, star_action
from .nullcone import DEFAULT_TRIALS, NullConeReport, nullcone_test
from .tuples import MatTuple, check_compatible
from .witness import ComposedLR


def blowup_sizes(n: int) -> list[int]:
    """The coprime pair {n-1, n}; for n = 1 only d = 1 is meaningful."""
    return [d for d in (n - 1, n) if d >= 1]


def reduce_to_conjugation(A: MatTuple, B: MatTuple, T: MatTuple):
    """Step 3 data for one certificate T: (P, U~, V~, det U_1)."""
    F, d = A.field, T.n
    v = [T[i][j, k] for i in range(T.m) for j in range(d) for k in range(d)]
    P = complete_to_invertible(F, v)
    U = star_action(P, blow_up(A, d), check=False)
    V = star_action(P, blow_up(B, d), check=False)
    U1_inv = linalg.inverse(F, U[0])
    V1_inv = linalg.inverse(F, V[0])
    Ut = MatTuple(F, U.n, tuple(linalg.matmul(F, U1_inv, Ui) for Ui in U.mats[1:]))
    Vt = MatTuple(F, V.n, tuple(linalg.matmul(F, V1_inv, Vi) for Vi in V.mats[1:]))
    return P, Ut, Vt


def separate_lr(
    A: MatTuple,
    B: MatTuple,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    force_charpoly: bool = False,
) -> SeparationResult:
    """Decide whether the SL_n x SL_n orbit closures of A and B meet."""
    check_compatible(A, B)
    F, n, m = A.field, A.n, A.m
    ds = blowup_sizes(n)
    details: dict = {"seed": seed, "trials": trials}

    rep_a = nullcone_test(A, ds[0], trials, seed, tag="A")
    rep_b = nullcone_test(B, ds[0], trials, seed, tag="B")
    details["nullcone"] = {"A": rep_a, "B": rep_b}

    if not rep_a.outside and not rep_b.outside:
        details.update(step=1, randomized_inside=True, failure_bound=2 * rep_a.failure_bound)
        return SeparationResult(Verdict.EQUIVALENT, details=details)

    # certify A when both are outside
    out_name, X_out, rep = ("A", A, rep_a) if rep_a.outside else ("B", B, rep_b)
    details["certified"] = out_name
    if not (rep_a.outside and rep_b.outside):
        W = rep.certificate
        va, vb = W.evaluate(A), W.evaluate(B)
        if va != vb:
            details.update(step=1, d=W.d)
            return SeparationResult(Verdict.SEPARATED, W, (va, vb), details=details)
        # the "inside" verdict was wrong; carry on with the outside tuple's certificates

    certs: dict[int, NullConeReport] = {ds[0]: rep}
    for d in ds[1:]:
        r = nullcone_test(X_out, d, trials, seed, tag=out_name)
        if not r.outside:
            raise CertificateSearchError(
                f"no certificate of size {d} found in {trials} trials although {out_name} is outside the null cone"
            )
        certs[d] = r
    details["certificates"] = {d: r.certificate for d, r in certs.items()}

    for d in ds:
        W = certs[d].certificate
        va, vb = W.evaluate(A), W.evaluate(B)
        if va != vb:
            details.update(step=2, d=d)
            return SeparationResult(Verdict.SEPARATED, W, (va, vb), details=details)

    inner_stats = {}
    for d in ds:
        P, Ut, Vt = reduce_to_conjugation(A, B, certs[d].certificate.T)
        res = separate_conj(Ut, Vt, force_charpoly=force_charpoly)
        inner_stats[d] = res.stats
        if res.separated:
            W = ComposedLR(F, n, m, P=P, d=d, inner=res.witness)
            details.update(step=3, d=d, P=P, inner_stats=inner_stats)
            return SeparationResult(Verdict.SEPARATED, W, verified(W, A, B), stats=res.stats, details=details)
    details.update(step=3, inner_stats=inner_stats, randomized_inside=False)
    return SeparationResult(Verdict.EQUIVALENT, details=details)
