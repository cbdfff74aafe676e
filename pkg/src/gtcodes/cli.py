"""Command line interface: ``gtc <subcommand> ...``.

Exit status: 0 on success, 2 on usage or input errors, 3 when a work budget
would be exceeded, 1 if the worked-example self-check fails.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from . import __version__
from .codes import CodeSpec, Codeword, evaluation_matrix, polytope_code
from .distance import certify_lower_bound, default_budget, min_distance, min_distance_exhaustive
from .errors import BudgetExceeded, GTCError, ZeroIdeal
from .exponents import ExponentSet, Polytope, enumerate_H, format_points
from .field import make_field
from .structure import dual_code, duality_report, ideal_to_U

# Row numbers (1-based, canonical order) printed for the F_5, r = 2 example.
EXAMPLE_U = "0,0;1,0;2,0;0,1;1,1;2,1"
EXAMPLE_GENERATOR_ROWS = [1, 3, 5, 7, 9, 15]
EXAMPLE_CONTROL_ROWS = [2, 4, 5, 7, 9, 11, 12, 13, 14, 15]


class UsageError(GTCError):
    pass


def _matrix_text(A: np.ndarray, sep: str = " ") -> str:
    return "\n".join(sep.join(str(int(x)) for x in row) for row in A)


def _spec(args) -> CodeSpec:
    return CodeSpec.build(args.q, args.r, ExponentSet.parse(args.u, args.q, args.r))


def _budget(args) -> int:
    return args.budget if getattr(args, "budget", None) is not None else default_budget()


def cmd_field_info(args) -> dict:
    F = make_field(args.q)
    return {
        "q": F.q,
        "p": F.p,
        "m": F.m,
        "modulus": list(F.modulus),
        "alpha": F.alpha,
        "exp": F.exp_table.tolist(),
    }


def cmd_matrix(args):
    E = evaluation_matrix(args.q, args.r)
    I_sigma = E.sigma_matrix()
    if args.format in ("matrix-text", "csv"):
        sep = " " if args.format == "matrix-text" else ","
        return _matrix_text(E.entries, sep) + "\n\n" + _matrix_text(I_sigma, sep)
    return {
        "q": args.q,
        "r": args.r,
        "alpha": E.field.alpha,
        "n": E.n,
        "order": format_points(E.order.points),
        "M": E.entries.tolist(),
        "I_sigma": I_sigma.tolist(),
    }


def cmd_build(args) -> dict:
    spec = _spec(args)
    dual = dual_code(spec)
    return {
        "q": spec.q,
        "r": spec.r,
        "n": spec.n,
        "k": spec.k,
        "U": format_points(spec.basis),
        "dualU": format_points(dual.basis),
        "generator": spec.rows().tolist(),
        "control": dual.rows().tolist(),
    }


def cmd_dual(args) -> dict:
    return duality_report(_spec(args)).to_json()


def cmd_recover(args) -> dict:
    doc = json.loads(Path(args.codewords).read_text())
    if isinstance(doc, dict):
        doc = doc["codewords"]
    F = make_field(args.q)
    gens = [Codeword(v, F, args.r) for v in doc]
    try:
        U = ideal_to_U(F, args.r, gens)
    except ZeroIdeal:
        return {"q": args.q, "r": args.r, "U": "", "k": 0, "zero_ideal": True}
    return {"q": args.q, "r": args.r, "U": format_points(U), "k": len(U), "zero_ideal": False}


def cmd_distance(args) -> dict:
    spec = _spec(args)
    budget = _budget(args)
    result = min_distance(spec, args.method, budget)
    out = {"q": spec.q, "r": spec.r, "n": spec.n, "k": spec.k, **result.to_json()}
    if args.certify is not None:
        ok = certify_lower_bound(spec, args.certify, budget)
        out["certify"] = {"d": args.certify, "certified": ok}
        if ok:
            out["certified_lower_bound"] = max(out["certified_lower_bound"], args.certify)
    return out


def cmd_certify(args) -> dict:
    spec = _spec(args)
    ok = certify_lower_bound(spec, args.d, _budget(args))
    return {"q": spec.q, "r": spec.r, "n": spec.n, "k": spec.k, "d": args.d, "certified": ok}


def cmd_polytope(args) -> dict:
    P = Polytope.from_json(json.loads(Path(args.file).read_text()))
    pc = polytope_code(args.q, P)
    return {
        "q": args.q,
        "r": P.r,
        "n": pc.spec.n,
        "lattice_points": pc.n_lattice_points,
        "k": pc.k,
        "U": format_points(pc.spec.basis),
    }


def cmd_search(args, stdout: TextIO):
    order = enumerate_H(args.q, args.r)
    if not 1 <= args.k <= order.n:
        raise UsageError(f"k must lie in 1..{order.n}")
    rng = np.random.default_rng(args.seed)
    budget = _budget(args)
    records = []
    for _ in range(args.samples):
        pos = np.sort(rng.choice(order.n, size=args.k, replace=False))
        spec = CodeSpec.build(args.q, args.r, [order[int(j)] for j in pos])
        res = min_distance(spec, args.method, budget)
        stamp = None if args.no_timestamp else _dt.datetime.now(_dt.timezone.utc).isoformat()
        records.append(
            {
                "q": spec.q,
                "r": spec.r,
                "U": format_points(spec.basis),
                "n": spec.n,
                "k": spec.k,
                "d": res.d,
                "method": res.method,
                "seed": args.seed,
                "timestamp": stamp,
            }
        )
    lines = "".join(json.dumps(rec) + "\n" for rec in records)
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(lines)
        return {"records": len(records), "out": str(args.out)}
    stdout.write(lines)
    return None


def worked_example() -> dict:
    """The F_5, r = 2 example with its self-checks."""
    E = evaluation_matrix(5, 2)
    spec = CodeSpec.build(5, 2, EXAMPLE_U)
    report = duality_report(spec)
    gen_rows = [j + 1 for j in spec.positions]
    ctrl_rows = [j + 1 for j in E.order.positions(report.U_perp)]
    d = min_distance_exhaustive(spec)
    checks = {
        "alpha_is_2": E.field.alpha == 2,
        "symmetric": bool(np.array_equal(E.entries, E.entries.T)),
        "gram_is_I_sigma": bool(np.array_equal(E.gram(), E.sigma_matrix())),
        "sigma_fixed_points": E.order.n_fixed == 4,
        "generator_rows": gen_rows == EXAMPLE_GENERATOR_ROWS,
        "control_rows": ctrl_rows == EXAMPLE_CONTROL_ROWS,
        "k": spec.k == 6,
        "duality": report.gram_ok and report.dims_ok and not report.self_dual,
        "distance_certified": certify_lower_bound(spec, d.d)
        and not certify_lower_bound(spec, d.d + 1),
    }
    return {
        "q": 5,
        "r": 2,
        "n": E.n,
        "order": format_points(E.order.points),
        "M": E.entries.tolist(),
        "I_sigma": E.sigma_matrix().tolist(),
        "U": format_points(spec.basis),
        "generator_rows": gen_rows,
        "control_rows": ctrl_rows,
        "dualU": format_points(report.U_perp),
        "d": d.d,
        "checks": checks,
        "ok": all(checks.values()),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "matrix-text", "csv"], default="json")

    def qr(p: argparse.ArgumentParser, need_u: bool = False) -> None:
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        if need_u:
            p.add_argument("--u", required=True, help='exponent set, e.g. "0,0;1,0;0,1"')

    parser = argparse.ArgumentParser(prog="gtc", description="Generalized toric codes over F_q.")
    parser.add_argument("--version", action="version", version=f"gtc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", parents=[common])
    p.add_argument("--q", type=int, required=True)

    qr(sub.add_parser("matrix", parents=[common]))
    qr(sub.add_parser("build", parents=[common]), need_u=True)
    qr(sub.add_parser("dual", parents=[common]), need_u=True)

    p = sub.add_parser("recover", parents=[common])
    qr(p)
    p.add_argument("--codewords", required=True, help="JSON list of codeword vectors")

    p = sub.add_parser("distance", parents=[common])
    qr(p, need_u=True)
    p.add_argument("--method", choices=["exhaustive", "rank", "both", "auto"], default="exhaustive")
    p.add_argument("--certify", type=int, default=None, metavar="D")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("certify", parents=[common])
    qr(p, need_u=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("polytope", parents=[common])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--file", required=True, help="polytope JSON")

    p = sub.add_parser("search", parents=[common])
    qr(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["exhaustive", "rank", "auto"], default="auto")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--no-timestamp", action="store_true")

    sub.add_parser("example", parents=[common])
    return parser


_HANDLERS = {
    "field-info": cmd_field_info,
    "matrix": cmd_matrix,
    "build": cmd_build,
    "dual": cmd_dual,
    "recover": cmd_recover,
    "distance": cmd_distance,
    "certify": cmd_certify,
    "polytope": cmd_polytope,
    "example": lambda args: worked_example(),
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def fail(code: str, exc: Exception, status: int) -> int:
        print(f"gtc: {exc}", file=stderr)
        if args.format == "json":
            stdout.write(json.dumps({"error": code, "detail": str(exc)}) + "\n")
        return status

    try:
        if args.command == "search":
            doc = cmd_search(args, stdout)
        else:
            doc = _HANDLERS[args.command](args)
    except BudgetExceeded as exc:
        return fail("BudgetExceeded", exc, 3)
    except (GTCError, ValueError, OSError, KeyError) as exc:
        return fail(type(exc).__name__, exc, 2)

    if isinstance(doc, str):
        stdout.write(doc + "\n")
    elif doc is not None:
        stdout.write(json.dumps(doc) + "\n")
    if args.command == "example" and not doc["ok"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
