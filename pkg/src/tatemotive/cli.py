"""Command-line interface.

Every command builds a JSON-native document; ``--json`` prints it as JSON and
the default text format is rendered from the same document, so both carry
identical data.  Exit codes: 0 success, 1 parse error, 2 oracle budget
exceeded, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import graded
from .graded import ExpressionError, GradedTateObject, k0_class, parse_expression
from .k0_lambda import RepSeries, lambda_sigma, lambda_t, zeta, zeta_rational
from .laurent import LaurentPolynomial
from .oracle import Budget, BudgetExceeded
from .partitions import parse_partition, partitions_up_to
from .schur import classify, schur_apply, schur_vanishes
from .series import TruncatedSeries

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3
ORDER_ENV = "TATEMOTIVE_ORDER"

# how text output renders structured fields
FIELD_KINDS = {
    "class": "laurent",
    "result": "object",
    "series": "series",
    "lambda_sigma": "rep_series",
    "table": "table",
    "suites": "suites",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _default_order() -> int:
    return int(os.environ.get(ORDER_ENV, "16"))


def _budget(text: str) -> Budget:
    try:
        dim, n = (int(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"budget must look like DIM:N, got {text!r}") from None
    return Budget(max_dim=dim, max_n=n)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tatemotive", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = p.add_subparsers(dest="command", required=True)

    def with_expr(sp):
        sp.add_argument("expr", nargs="?", help='object expression, e.g. "Q(0)[1] + P:2"')
        sp.add_argument("--file", help="read expressions from a file, one per line")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    def with_order(sp):
        sp.add_argument("--order", type=int, default=None,
                        help=f"truncation order (default ${ORDER_ENV} or 16)")
        return sp

    with_expr(sub.add_parser("classify", help="finite-dimensionality data"))
    sp = sub.add_parser("schur", help="evaluate a Schur functor")
    sp.add_argument("partition", help='partition such as "[2,1]"')
    with_expr(sp)
    sp = with_expr(sub.add_parser("vanish-table", help="vanishing of S_lam for |lam| <= N"))
    sp.add_argument("--max", type=int, default=4, dest="max_size")
    with_expr(sub.add_parser("k0", help="class in Z[tau, 1/tau]"))
    with_order(with_expr(sub.add_parser("lambda", help="lambda_t of the class")))
    sp = with_order(with_expr(sub.add_parser("zeta", help="zeta function")))
    sp.add_argument("--rational", action="store_true", help="numerator/denominator form")
    sp.add_argument("--reduced", action="store_true", help="cancel common factors")
    with_order(with_expr(sub.add_parser("lambda-sigma", help="representation-ring lambda")))
    sp = sub.add_parser("verify", help="run the cross-checking suites")
    sp.add_argument("--budget", default="4:5", help="oracle budget DIM:N (default 4:5)")
    sp.add_argument("--max-dim", type=int, default=3, help="largest object dimension on the grid")
    sp.add_argument("--max-size", type=int, default=4, help="largest |lam| on the grid")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return p


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------

def _order(args) -> int:
    order = args.order if args.order is not None else _default_order()
    if order < 1:
        raise UsageError("order must be >= 1")
    return order


def _document(args, x: GradedTateObject) -> dict[str, Any]:
    cmd = args.command
    if cmd == "classify":
        return classify(x).to_dict()
    if cmd == "schur":
        lam = parse_partition(args.partition)
        value = schur_apply(lam, x)
        doc = {"partition": str(lam), "result": value.to_json(), "class": k0_class(value).to_json()}
        if lam:
            doc["vanishes"] = schur_vanishes(lam, x)
        return doc
    if cmd == "vanish-table":
        table = [{"partition": str(lam), "vanishes": schur_vanishes(lam, x)}
                 for lam in partitions_up_to(args.max_size)]
        return {"d_plus": graded.d_plus(x), "d_minus": graded.d_minus(x), "table": table}
    if cmd == "k0":
        return {"class": k0_class(x).to_json()}
    if cmd == "lambda":
        return {"class": k0_class(x).to_json(),
                "series": lambda_t(k0_class(x), _order(args)).to_json()}
    if cmd == "zeta":
        if args.rational or args.reduced:
            r = zeta_rational(x)
            if args.reduced:
                r = r.reduced()
            return {"numerator": r.numerator_str(), "denominator": r.denominator_str()}
        return {"class": k0_class(x).to_json(), "series": zeta(k0_class(x), _order(args)).to_json()}
    if cmd == "lambda-sigma":
        return {"class": k0_class(x).to_json(),
                "lambda_sigma": lambda_sigma(x, _order(args)).to_json()}
    raise UsageError(f"unknown command {cmd}")


def _verify_document(args) -> dict[str, Any]:
    from .verification import run_all

    budget = _budget(args.budget)
    reports = run_all(seed=args.seed, max_dim=args.max_dim, max_size=args.max_size, budget=budget)
    return {
        "budget": args.budget,
        "seed": args.seed,
        "suites": [r.to_json() for r in reports],
        "passed": all(r.passed for r in reports),
    }


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------

def _scalar(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _render_field(key: str, value: Any) -> list[str]:
    kind = FIELD_KINDS.get(key)
    if kind == "laurent":
        return [f"{key}: {LaurentPolynomial.from_json(value)}"]
    if kind == "object":
        return [f"{key}: {GradedTateObject.from_json(value)}"]
    if kind == "series":
        s = TruncatedSeries.from_json(value)
        return [f"{key}:"] + [f"  t^{n}: {c}" for n, c in enumerate(s.coefficients)]
    if kind == "rep_series":
        return [f"{key}:"] + ["  " + line for line in RepSeries.from_json(value).lines()]
    if kind == "table":
        return [f"{key}:"] + [f"  {row['partition']}: {_scalar(row['vanishes'])}" for row in value]
    if kind == "suites":
        lines = [f"{key}:"]
        for s in value:
            status = "PASS" if not s["failures"] else "FAIL"
            lines.append(f"  {status} {s['name']}: {s['cases']} cases, "
                         f"{len(s['failures'])} failures")
            lines += [f"    {f}" for f in s["failures"]]
        return lines
    return [f"{key}: {_scalar(value)}"]


def render_text(doc: dict[str, Any]) -> str:
    """Text form of a document; a one-field document prints only its value."""
    if len(doc) == 1:
        (key, value), = doc.items()
        line = _render_field(key, value)[0]
        return line.split(": ", 1)[1]
    lines: list[str] = []
    for key, value in doc.items():
        lines += _render_field(key, value)
    return "\n".join(lines)


def _emit(docs: list[dict[str, Any]], as_json: bool, batch: bool) -> str:
    if as_json:
        return json.dumps(docs if batch else docs[0], indent=2)
    return "\n\n".join(render_text(d) for d in docs)


def _expressions(args) -> tuple[list[str], bool]:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            exprs = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        return exprs, True
    if args.expr is None:
        raise UsageError("an expression or --file is required")
    return [args.expr], False


def run(argv: Sequence[str] | None = None) -> tuple[str, int]:
    """Run a command and return ``(output, exit code)``."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            doc = _verify_document(args)
            code = EXIT_OK if doc["passed"] else EXIT_VERIFY
            return _emit([doc], args.json, False), code
        exprs, batch = _expressions(args)
        docs = [_document(args, parse_expression(e)) for e in exprs]
        return _emit(docs, args.json, batch), EXIT_OK
    except (ExpressionError, UsageError, ValueError) as exc:
        return f"error: {exc}", EXIT_PARSE
    except BudgetExceeded as exc:
        return f"error: {exc}", EXIT_BUDGET


def main(argv: Sequence[str] | None = None) -> int:
    out, code = run(argv)
    stream = sys.stdout if code == EXIT_OK or code == EXIT_VERIFY else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
