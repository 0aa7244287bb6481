"""Command-line interface.

Exit status: 0 equivalent / inside / evaluated, 1 separated / outside (or a
failed property check), 2 input error, 3 field too small.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import bounds as bounds_mod
from .conj import separate_conj
from .errors import DimensionError, FieldMismatchError, FieldTooSmallError
from .field import Field
from .jsonio import SCHEMA, InputError, dumps, jsonable, load_tuple, load_witness, tuple_hash
from .leftright import separate_lr
from .nullcone import DEFAULT_TRIALS, nullcone_test
from .pivot import pivot_basis
from .zeta import ZETA_CHECKS, property_run

EXIT_OK, EXIT_POSITIVE, EXIT_INPUT, EXIT_ENV = 0, 1, 2, 3


def _field_arg(text):
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="random trials for certificate search")
    common.add_argument("--d", type=int, default=None, help="certificate size d for nullcone")
    common.add_argument("--field-override", type=_field_arg, default=None, help='reinterpret inputs over "Q" or "GF(p)"')
    common.add_argument("--force-charpoly-path", action="store_true", help="compare characteristic polynomials even when traces suffice")
    common.add_argument("--out", type=Path, default=None, help="also write the result JSON here")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs are single-threaded")

    parser = argparse.ArgumentParser(prog="orbitsep", description="Orbit closure separation for matrix tuples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sep-conj", parents=[common], help="separate under simultaneous conjugation")
    p.add_argument("a", type=Path)
    p.add_argument("b", type=Path)

    p = sub.add_parser("sep-lr", parents=[common], help="separate under the left-right action")
    p.add_argument("a", type=Path)
    p.add_argument("b", type=Path)

    p = sub.add_parser("nullcone", parents=[common], help="left-right null-cone test with certificate")
    p.add_argument("x", type=Path)

    p = sub.add_parser("pivot", parents=[common], help="pivot basis of the generated algebra")
    p.add_argument("x", type=Path)

    p = sub.add_parser("eval", parents=[common], help="evaluate a witness on tuple files")
    p.add_argument("--witness", type=Path, required=True, help="witness JSON or a result file containing one")
    p.add_argument("x", type=Path, nargs="+")

    p = sub.add_parser("bounds", parents=[common], help="degree bounds catalog")
    p.add_argument("--name", choices=sorted(bounds_mod.CATALOG), default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)

    p = sub.add_parser("zeta-check", parents=[common], help="random checks of the zeta identities")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--cases", default="2,1,1;2,2,1;3,2,2", help='semicolon separated "n,d,c" triples')
    p.add_argument("--field", type=_field_arg, default=Field(101))
    return parser


def _emit(doc: dict, args) -> None:
    text = dumps(doc)
    sys.stdout.write(text)
    if args.out is not None:
        args.out.write_text(text)


def _inputs(args, *paths):
    tuples = [load_tuple(p, args.field_override) for p in paths]
    return tuples, [{"path": str(p), "sha256": tuple_hash(X)} for p, X in zip(paths, tuples)]


def _header(args, argv, inputs) -> dict:
    return {"schema": SCHEMA, "command": {"name": args.command, "argv": list(argv)}, "inputs": inputs}


def _separation_doc(args, argv, inputs, A, res, start, bound_names) -> dict:
    F = A.field
    doc = _header(args, argv, inputs)
    doc.update(
        field=F.to_json(),
        verdict=res.verdict.value,
        witness=res.witness.to_json() if res.witness else None,
        values=[F.format_scalar(v) for v in res.values] if res.values else None,
        seed=args.seed,
        trials=args.trials,
        stats=jsonable(res.stats, F),
        details=jsonable(res.details, F),
    )
    if res.witness is not None:
        deg = res.witness.degree
        checks = {"degree": deg}
        for name in bound_names:
            b = bounds_mod.bound(name, A.n, A.m)
            checks[name] = {"value": b, "within": deg <= b}
        doc["bound_checks"] = checks
    else:
        doc["bound_checks"] = None
    doc["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return doc


def cmd_sep_conj(args, argv):
    start = time.perf_counter()
    (A, B), inputs = _inputs(args, args.a, args.b)
    res = separate_conj(A, B, force_charpoly=args.force_charpoly_path)
    ch = A.field.characteristic
    names = ["sep-conj-char0" if ch == 0 or ch > A.n else "sep-conj"]
    _emit(_separation_doc(args, argv, inputs, A, res, start, names), args)
    return EXIT_POSITIVE if res.separated else EXIT_OK


def cmd_sep_lr(args, argv):
    start = time.perf_counter()
    (A, B), inputs = _inputs(args, args.a, args.b)
    res = separate_lr(A, B, trials=args.trials, seed=args.seed, force_charpoly=args.force_charpoly_path)
    ch = A.field.characteristic
    names = [
        "sep-lr-composed-char0" if ch == 0 or ch > A.n * A.n else "sep-lr-composed",
        "sep-lr-reduction-char0" if ch == 0 or ch > A.n else "sep-lr-reduction",
    ]
    _emit(_separation_doc(args, argv, inputs, A, res, start, names), args)
    return EXIT_POSITIVE if res.separated else EXIT_OK


def cmd_nullcone(args, argv):
    start = time.perf_counter()
    (X,), inputs = _inputs(args, args.x)
    rep = nullcone_test(X, d=args.d, trials=args.trials, seed=args.seed)
    doc = _header(args, argv, inputs)
    doc.update(field=X.field.to_json(), report=rep.to_json(), timing={"seconds": round(time.perf_counter() - start, 6)})
    _emit(doc, args)
    return EXIT_POSITIVE if rep.outside else EXIT_OK


def cmd_pivot(args, argv):
    start = time.perf_counter()
    (X,), inputs = _inputs(args, args.x)
    pb = pivot_basis(X)
    doc = _header(args, argv, inputs)
    doc.update(
        field=X.field.to_json(),
        dim=pb.dim,
        pivots=[list(w) for w in pb.words],
        max_length=pb.max_length,
        length_bound=bounds_mod.pivot_length_bound(X.n),
        candidates=pb.stats.candidates,
        timing={"seconds": round(time.perf_counter() - start, 6)},
    )
    _emit(doc, args)
    return EXIT_OK


def cmd_eval(args, argv):
    W = load_witness(args.witness)
    tuples, inputs = _inputs(args, *args.x)
    values = [W.evaluate(X) for X in tuples]
    for v in values:
        print(W.field.format_scalar(v))
    if args.out is not None:
        doc = _header(args, argv, inputs)
        doc.update(witness=W.to_json(), values=[W.field.format_scalar(v) for v in values])
        args.out.write_text(dumps(doc))
    return EXIT_OK


def cmd_bounds(args, argv):
    if args.name is not None:
        doc = {"name": args.name, "n": args.n, "m": args.m, "value": bounds_mod.bound(args.name, args.n, args.m)}
    else:
        doc = {
            "n": args.n,
            "m": args.m,
            "bounds": {
                name: bounds_mod.bound(name, args.n, args.m)
                for name in sorted(bounds_mod.CATALOG)
                if args.m is not None or name not in bounds_mod.NEEDS_M
            },
        }
    _emit(doc, args)
    return EXIT_OK


def cmd_zeta_check(args, argv):
    cases = []
    for chunk in args.cases.split(";"):
        try:
            n, d, c = (int(x) for x in chunk.split(","))
        except ValueError:
            raise InputError(f"bad case {chunk!r}; expected n,d,c") from None
        cases.append((n, d, c))
    report, all_ok = [], True
    for n, d, c in cases:
        passed = property_run(args.field, n, d, c, samples=args.samples, m=args.m, seed=args.seed)
        ok = all(passed[k] == args.samples for k in ZETA_CHECKS)
        all_ok &= ok
        report.append({"n": n, "d": d, "c": c, "samples": args.samples, "passed": passed, "ok": ok})
    _emit({"schema": SCHEMA, "field": args.field.to_json(), "seed": args.seed, "cases": report, "ok": all_ok}, args)
    return EXIT_OK if all_ok else EXIT_POSITIVE


COMMANDS = {
    "sep-conj": cmd_sep_conj,
    "sep-lr": cmd_sep_lr,
    "nullcone": cmd_nullcone,
    "pivot": cmd_pivot,
    "eval": cmd_eval,
    "bounds": cmd_bounds,
    "zeta-check": cmd_zeta_check,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, argv)
    except FieldTooSmallError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV
    except (InputError, DimensionError, FieldMismatchError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
