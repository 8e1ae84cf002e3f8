"""Command-line front end.

Exit codes: 0 success, 1 mathematical negative (not a Groebner basis,
rank-deficient F, search failed, identity check failed), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import checks
from .circulant import DEFAULT_MINOR_CAP, Q, ShiftShape, enumerate_minors
from .completion import DEFAULT_MAX_ATTEMPTS, DEFAULT_SEED, STRATEGIES, ProblemInstance, solve, verify
from .errors import CompletionFailedError, DimensionError, RankDeficientError, ResourceLimitError
from .field import FieldSpec
from .groebner import check_buchberger, lm_set, membership_counterexample
from .linalg import DEFAULT_DET_CAP
from .poly import GREVLEX, ORDER_KINDS, enumerate_monomials

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shiftbasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=False, field=None, seed=False, trials=False, shape_required=True):
        p.add_argument("--n", type=int, required=shape_required)
        p.add_argument("--d", type=int, required=shape_required)
        if order:
            p.add_argument("--order", choices=ORDER_KINDS, default=GREVLEX)
        if field:
            p.add_argument("--field", type=_field, default=field)
        if seed:
            p.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
        if trials:
            p.add_argument("--trials", type=_positive, default=20)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--minor-cap", type=_positive, default=DEFAULT_MINOR_CAP)
        p.add_argument("--det-cap", type=_positive, default=DEFAULT_DET_CAP)

    common(sub.add_parser("minors", help="list the maximal minors of X"), order=True)
    common(sub.add_parser("leading-set", help="leading monomials of the minors"), order=True)
    common(sub.add_parser("check-groebner", help="Buchberger certification of the minors"), order=True)

    p = sub.add_parser("complete-basis", help="find x whose shifts complete F to a basis")
    common(p, shape_required=False)
    p.add_argument("--input", required=True, help="instance JSON path, or - for stdin")
    p.add_argument("--field", type=_field, default=None, help="override the document's field")
    p.add_argument("--strategy", choices=STRATEGIES, default="grid")
    p.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    p.add_argument("--max-attempts", type=_positive, default=DEFAULT_MAX_ATTEMPTS)

    common(sub.add_parser("laplace-check", help="Laplace sum vs direct det on random F"),
           field="fp:10007", seed=True, trials=True)
    common(sub.add_parser("bijection-check", help="column-set / exponent roundtrip"))
    common(sub.add_parser("verify", help="run every identity check for one shape"),
           field="fp:10007", seed=True, trials=True)
    return parser


def _shape(args) -> ShiftShape:
    try:
        return ShiftShape(args.n, args.d)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _emit(args, obj, lines):
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_minors(args) -> int:
    shape = _shape(args)
    rows = enumerate_minors(shape, Q, shape.order(args.order), args.minor_cap)
    table = [(str(H), str(p), str(p.leading_monomial())) for H, p in rows]
    width = max(len(h) for h, _, _ in table)
    pwidth = max(len(p) for _, p, _ in table)
    _emit(
        args,
        {"n": shape.n, "d": shape.d, "order": args.order,
         "minors": [{"columns": h, "polynomial": p, "leading_monomial": lm} for h, p, lm in table]},
        [f"{h.ljust(width)}  {p.ljust(pwidth)}  LM={lm}" for h, p, lm in table],
    )
    return EXIT_OK


def cmd_leading_set(args) -> int:
    shape = _shape(args)
    order = shape.order(args.order)
    leads = order.sort_desc(lm_set(shape, order, args.minor_cap))
    expected = enumerate_monomials(shape.d, shape.block_rows, order)
    missing = [m for m in expected if m not in set(leads)]
    _emit(
        args,
        {"n": shape.n, "d": shape.d, "order": args.order,
         "leading_monomials": [str(m) for m in leads],
         "complete": not missing, "missing": [str(m) for m in missing]},
        [", ".join(str(m) for m in leads),
         "complete: yes" if not missing else "missing: " + ", ".join(str(m) for m in missing)],
    )
    return EXIT_OK


def cmd_check_groebner(args) -> int:
    shape = _shape(args)
    report = check_buchberger(shape, args.order, cap=args.minor_cap)
    obj = report.to_json_obj()
    cex = None
    if not report.ok:
        cex = membership_counterexample(shape, args.order, args.minor_cap)
        obj["counterexample"] = None if cex is None else {"member": str(cex[0]), "normal_form": str(cex[1])}
    lines = [
        f"n={shape.n} d={shape.d} order={args.order}",
        f"verdict: {report.verdict.value}",
        f"pairs: {report.pair_count}, failures: {len(report.failures)}",
        f"leading monomials complete: {'yes' if report.lm_set_complete else 'no'}",
    ]
    if report.missing_monomials:
        lines.append("missing: " + ", ".join(str(m) for m in report.missing_monomials))
    for f in report.failures:
        lines.append(f"  S({f.pair[0]}, {f.pair[1]}) = {f.s_poly} -> remainder {f.remainder}")
    if cex is not None:
        lines.append(f"ideal member with nonzero normal form: {cex[0]} -> {cex[1]}")
    _emit(args, obj, lines)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _load_instance(args) -> ProblemInstance:
    try:
        if args.input == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read instance: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError("instance must be a JSON object")
    for key in ("n", "d"):
        flag = getattr(args, key)
        if flag is not None:
            if key in doc and doc[key] != flag:
                raise UsageError(f"--{key} {flag} contradicts instance {key}={doc[key]}")
            doc[key] = flag
    try:
        return ProblemInstance.from_json_obj(doc, args.field)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed instance: {exc}") from None


def cmd_complete_basis(args) -> int:
    inst = _load_instance(args)
    try:
        result = solve(inst, args.strategy, args.seed, args.max_attempts)
    except (RankDeficientError, CompletionFailedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    verified = verify(inst, [v.value for v in result.x])
    obj = {"n": inst.shape.n, "d": inst.shape.d, "field": str(inst.field), **result.to_json_obj(), "verified": verified}
    _emit(
        args,
        obj,
        [f"x = ({', '.join(obj['x'])})",
         f"det M = {obj['det_value']}",
         f"strategy: {result.strategy}, attempts: {result.attempts}",
         f"verified rank {inst.shape.n}: {'yes' if verified else 'no'}"],
    )
    return EXIT_OK if verified else EXIT_NEGATIVE


def _summaries(args, results) -> int:
    passed = all(r["passed"] for r in results)
    _emit(
        args,
        {"results": results, "passed": passed},
        [f"{r['check']}: {'pass' if r['passed'] else 'FAIL'} "
         + " ".join(f"{k}={v}" for k, v in r.items() if k not in ("check", "passed")) for r in results]
        + [f"overall: {'pass' if passed else 'FAIL'}"],
    )
    return EXIT_OK if passed else EXIT_NEGATIVE


def cmd_laplace_check(args) -> int:
    shape = _shape(args)
    rng = random.Random(args.seed)
    return _summaries(args, [checks.laplace_check(shape, args.field, rng, args.trials, det_cap=args.det_cap)])


def cmd_bijection_check(args) -> int:
    shape = _shape(args)
    return _summaries(args, [checks.bijection_check(shape)])


def cmd_verify(args) -> int:
    shape = _shape(args)
    return _summaries(args, checks.run_all(shape, args.field, args.seed, args.trials, det_cap=args.det_cap))


COMMANDS = {
    "minors": cmd_minors,
    "leading-set": cmd_leading_set,
    "check-groebner": cmd_check_groebner,
    "complete-basis": cmd_complete_basis,
    "laplace-check": cmd_laplace_check,
    "bijection-check": cmd_bijection_check,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
