"""Command-line front end.

Exit codes: 0 computed, 1 mathematical negative, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import chern, diophantine
from .errors import BudgetExceeded, InputError, MathematicalNegative
from .ideals import (
    INFINITE,
    Budget,
    MonomialOrder,
    groebner,
    krull_dimension,
    milnor_number,
    quotient_dimension,
    use_budget,
)
from .multivector import divergence
from .poisson import (
    SINGULARITY_TYPES,
    Unclassified,
    classify_singularity,
    degeneracy_divisor,
    ellipticity_report,
    jacobi_obstruction,
    modular_field,
    normal_form_structure,
    structure_from_document,
    structure_to_document,
)
from .polyring import VariableContext, parse_poly

SCHEMA = 1

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

_IDENT = re.compile(r"[^\W\d]\w*")


class _Output:
    def __init__(self, stream, as_json: bool, command: str):
        self.stream = stream
        self.as_json = as_json
        self.command = command

    def emit(self, lines: list[str], payload: dict):
        if self.as_json:
            doc = {"schema": SCHEMA, "command": self.command, **payload}
            self.stream.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        else:
            self.stream.write("\n".join(lines) + "\n")


def _load_document(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return structure_from_document(doc)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected a rational number, got {text!r}") from None


def _poly_context(sources: list[str], vars_opt: str | None, weights=None) -> VariableContext:
    if vars_opt:
        names = tuple(v.strip() for v in vars_opt.split(","))
    else:
        names = tuple(sorted({m.group() for s in sources for m in _IDENT.finditer(s)}))
    if weights is not None and len(weights) != len(names):
        raise InputError(f"{len(weights)} weights given for variables {', '.join(names)}")
    return VariableContext(names, (), weights)


def _fmt_point(pt) -> str:
    return "(" + ", ".join(str(c) for c in pt) + ")"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# subcommands


def cmd_jacobi(args, out):
    P, _ = _load_document(args.file)
    t = jacobi_obstruction(P)
    params = list(P.context.parameters)
    if t.is_zero():
        line = "Jacobi: HOLDS" + (f" (identically in {', '.join(params)})" if params else "")
        out.emit([line], {"holds": True, "parameters": params, "obstruction": "0"})
        return EXIT_OK
    out.emit(["Jacobi: FAILS", f"[pi,pi] = {t}"], {"holds": False, "parameters": params, "obstruction": str(t)})
    return EXIT_NEGATIVE


def cmd_pfaffian(args, out):
    P, spec = _load_document(args.file)
    h, proxy = degeneracy_divisor(P, spec or None)
    lines = [f"Pfaffian: {h}", f"Reduced (singular locus of codimension >= 2): {_yes(proxy)}"]
    out.emit(lines, {"pfaffian": str(h), "squarefree_proxy": proxy})
    return EXIT_OK if h else EXIT_NEGATIVE


def cmd_modular(args, out):
    P, spec = _load_document(args.file)
    if spec:
        P = P.specialize(spec)
    Z = modular_field(P)
    div = divergence(Z) if Z.degree == 1 else None
    comps = {P.context.variables[k[0]]: str(p) for k, p in sorted(Z.components.items())}
    lines = [f"Modular vector field: {Z}", f"Divergence: {div}"]
    out.emit(lines, {"modular_field": comps, "divergence": str(div)})
    return EXIT_OK


def cmd_classify_point(args, out):
    P, spec = _load_document(args.file)
    point = tuple(_rational(c) for c in args.point.split(","))
    r = ellipticity_report(P, point, spec or None)
    lines = [
        f"Point: {_fmt_point(r.point)}",
        f"Singular point of D: {_yes(r.divisor_vanishes_at_point)}",
        f"Normality proxy: {_yes(r.normal_proxy)}",
        f"Modular field nonzero: {_yes(r.modular_nonzero)}",
        f"Verdict: {r.verdict.value}",
    ]
    lines += [f"  reason: {reason}" for reason in r.reasons]
    out.emit(
        lines,
        {
            "point": [str(c) for c in r.point],
            "divisor_vanishes_at_point": r.divisor_vanishes_at_point,
            "normal_proxy": r.normal_proxy,
            "modular_nonzero": r.modular_nonzero,
            "verdict": r.verdict.value,
            "reasons": list(r.reasons),
        },
    )
    return EXIT_OK if r.is_elliptic else EXIT_NEGATIVE


def cmd_classify_sing(args, out):
    weights = _int_list(args.weights)
    ctx = _poly_context([args.poly], args.vars)
    f = parse_poly(args.poly, ctx)
    result = classify_singularity(f, weights)
    if isinstance(result, Unclassified):
        out.emit([f"Unclassified: {result.reason}"], {"type": None, "reason": result.reason})
        return EXIT_NEGATIVE
    w = ",".join(map(str, result.weights))
    out.emit(
        [f"Type: {result.label} (weights {w}, degree {result.degree}, Milnor number {result.milnor})"],
        {"type": result.label, "weights": list(result.weights), "degree": result.degree, "milnor": result.milnor},
    )
    return EXIT_OK


def cmd_milnor(args, out):
    weights = _int_list(args.weights) if args.weights else None
    ctx = _poly_context([args.poly], args.vars, weights)
    mu = milnor_number(parse_poly(args.poly, ctx))
    if mu == INFINITE:
        out.emit(["infinite"], {"milnor": None, "isolated": False})
        return EXIT_NEGATIVE
    out.emit([str(mu)], {"milnor": mu, "isolated": True})
    return EXIT_OK


def _basis(args):
    ctx = _poly_context(args.polys, args.vars)
    gens = [parse_poly(s, ctx) for s in args.polys]
    return groebner(gens, MonomialOrder(args.order), context=ctx)


def cmd_groebner(args, out):
    G = _basis(args)
    lines = [str(g) for g in G.generators] or ["0"]
    out.emit(lines, {"order": args.order, "variables": list(G.context.variables), "basis": lines})
    return EXIT_OK


def cmd_dim(args, out):
    G = _basis(args)
    k = krull_dimension(G)
    q = quotient_dimension(G)
    qs = "infinite" if q == INFINITE else str(q)
    out.emit(
        [f"Krull dimension: {k}", f"Quotient dimension: {qs}"],
        {"krull_dimension": k, "quotient_dimension": None if q == INFINITE else q},
    )
    return EXIT_OK


def cmd_chern(args, out):
    if args.family == "hypersurface":
        space = chern.Hypersurface(args.ambient, args.degree)
        nefs = ["H"]
    else:
        space = chern.ProductP1(args.degree)
        nefs = ["A", "B"]
    c = chern.total_chern(space)
    cc = chern.c1c2_minus_c3(c)
    pairings = {n: chern.pair_with(cc, n) for n in nefs}
    lines = [f"c(X) = {c}", f"c1c2 - c3 = {cc}"]
    lines += [f"{n}.(c1c2 - c3) = {v}" for n, v in pairings.items()]
    out.emit(lines, {"total_chern": str(c), "c1c2_minus_c3": str(cc), "pairings": pairings})
    return EXIT_OK


def cmd_tables(args, out):
    degrees = (1, 2, 3) if args.family == "hypersurface" else (1, 2, 3, 4)
    reports = [diophantine.table_for_space(args.family, d) for d in degrees]
    out.emit(diophantine.format_tables(reports).split("\n"), diophantine.tables_json(reports))
    return EXIT_OK


def cmd_emit_normal_form(args, out):
    lam = None if args.lam == "symbolic" else _rational(args.lam)
    tau = None if args.tau == "symbolic" else _rational(args.tau)
    P = normal_form_structure(args.type, lam, tau)
    doc = structure_to_document(P)
    if out.as_json:
        out.emit([], {"structure": doc})
    else:
        out.stream.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="logsymp", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--max-basis", type=int, default=Budget.max_basis, help="Groebner basis size limit")
    parser.add_argument("--max-degree", type=int, default=Budget.max_degree, help="Groebner degree limit")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("jacobi", cmd_jacobi, "check the Jacobi identity [pi,pi] = 0"),
        ("pfaffian", cmd_pfaffian, "degeneracy divisor and reducedness proxy"),
        ("modular", cmd_modular, "modular vector field for the coordinate volume"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="structure document (JSON)")
        p.set_defaults(func=fn)

    p = sub.add_parser("classify-point", help="ellipticity test at a rational point")
    p.add_argument("file")
    p.add_argument("--point", default="0,0,0,0", help="comma-separated rational coordinates")
    p.set_defaults(func=cmd_classify_point)

    p = sub.add_parser("classify-sing", help="match a surface singularity against E6/E7/E8")
    p.add_argument("poly")
    p.add_argument("--weights", required=True)
    p.add_argument("--vars", help="comma-separated variable order (default: sorted identifiers)")
    p.set_defaults(func=cmd_classify_sing)

    p = sub.add_parser("milnor", help="Milnor number of a polynomial")
    p.add_argument("poly")
    p.add_argument("--weights", help="weights for the product-formula cross-check")
    p.add_argument("--vars")
    p.set_defaults(func=cmd_milnor)

    for name, fn, help_ in (
        ("groebner", cmd_groebner, "reduced Groebner basis"),
        ("dim", cmd_dim, "Krull and quotient dimension of an ideal"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("polys", nargs="+")
        p.add_argument("--vars")
        p.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
        p.set_defaults(func=fn)

    p = sub.add_parser("chern", help="Chern classes of the two Fano families")
    p.add_argument("--family", choices=("hypersurface", "product"), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ambient", type=int, default=6, help="homogeneous coordinates of the ambient space")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("tables", help="solution tables for 8a6 + 9a7 + 10a8 = N")
    p.add_argument("--family", choices=("hypersurface", "product"), required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("emit-normal-form", help="structure document of an elliptic normal form")
    p.add_argument("type", type=str.lower, choices=sorted({"e6", "e7", "e8"} | {k.lower() for k in SINGULARITY_TYPES}))
    p.add_argument("--lam", default="1", help="rational value or 'symbolic'")
    p.add_argument("--tau", default="0", help="rational value or 'symbolic'")
    p.set_defaults(func=cmd_emit_normal_form)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = _Output(stdout, args.json, args.command)
    try:
        with use_budget(Budget(args.max_basis, args.max_degree)):
            return args.func(args, out)
    except BudgetExceeded as exc:
        stderr.write(f"error: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except MathematicalNegative as exc:
        out.emit([f"negative: {exc}"], {"negative": type(exc).__name__, "message": str(exc)})
        return EXIT_NEGATIVE
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
