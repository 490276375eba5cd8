"""Command-line front end.

Exit status: 0 on success or a reached verdict, 1 when a verdict is
undetermined (or a check fails), 2 on input errors.  Reports go to stdout,
errors to stderr.  File arguments that do not exist on disk are looked up
among the shipped data files (``k6_2.dga``, ``k6_2.map``, ``k6_2.rules``,
``unknot.rules``); ``-`` reads stdin.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import List, Optional

from .algebra import AlgebraError
from .dga import apply_automorphisms, check_axioms, mirror, parse_automorphism
from .io import format_dga, parse_dga, parse_projection, parse_rules
from .knots import K6_2_SUBSTITUTIONS, SHIPPED_FILES, k6_2, k6_2_projection, shipped_text
from .obstruction import (
    Witness,
    distinguish,
    refute_unit_product,
    verify_witness,
)
from .rewrite import check_local_confluence, ideal_images

EXIT_OK, EXIT_UNDETERMINED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    if os.path.exists(path):
        with open(path) as fh:
            return fh.read()
    if os.path.basename(path) in SHIPPED_FILES and os.path.dirname(path) == "":
        return shipped_text(path)
    raise InputError(f"{path}: no such file")


def load_dga(path: str):
    text = read_input(path)
    try:
        return parse_dga(text)
    except AlgebraError as exc:
        raise InputError(f"{path}: {exc}") from None


def parse_degrees(text: str):
    try:
        p, q = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'p,q', got {text!r}") from None
    return p, q


def cmd_check(args, out):
    dga = load_dga(args.file)
    report = check_axioms(dga)
    out.write(f"degree check: {'ok' if report.degree_ok else 'FAILED'}; "
              f"d^2 = 0: {'ok' if report.d_squared_zero else 'FAILED'}\n")
    for line in report.details:
        out.write(f"  {line}\n")
    return EXIT_OK if report else EXIT_UNDETERMINED


def _emit(text, args, out):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_mirror(args, out):
    _emit(format_dga(mirror(load_dga(args.file))), args, out)
    return EXIT_OK


def cmd_subst(args, out):
    dga = load_dga(args.file)
    autos = [parse_automorphism(dga.algebra, s) for s in args.substitutions]
    _emit(format_dga(apply_automorphisms(dga, autos)), args, out)
    return EXIT_OK


def cmd_project(args, out):
    dga = load_dga(args.file)
    spec = parse_projection(read_input(args.map))
    autos, proj = spec.bind(dga)
    work = apply_automorphisms(dga, autos)
    for phi in autos:
        out.write(f"subst {phi}\n")
    for g in work.algebra.names:
        out.write(f"pi(d {g}) = {proj.project(work[g])}\n")
    for r in ideal_images(proj, work):
        out.write(f"ideal generator: {r}\n")
    return EXIT_OK


def cmd_nf(args, out):
    text = read_input(args.rules)
    names = re.findall(r"[A-Za-z_][A-Za-z0-9_']*", args.expr)
    system = parse_rules(text, extra_names=names)
    report = check_local_confluence(system, args.check_length)
    if not report:
        sys.stderr.write("warning: rules are not confluent; normal form depends on order\n")
        for d in report.divergences:
            sys.stderr.write(f"  {d}\n")
    out.write(f"{system.normal_form(system.algebra.parse(args.expr))}\n")
    return EXIT_OK


def cmd_witness(args, out):
    dga = load_dga(args.file)
    p, q = args.degrees
    A = dga.algebra
    w = Witness(A.parse(args.x), A.parse(args.y), A.parse(args.z), p, q)
    check = verify_witness(dga, w)
    out.write(f"witness {w}: {'valid' if check else 'invalid'}\n")
    if not check:
        out.write(f"  {check.reason}\n")
    return EXIT_OK if check else EXIT_UNDETERMINED


def cmd_distinguish(args, out):
    d1, d2 = load_dga(args.file_a), load_dga(args.file_b)
    p, q = args.degrees
    spec = parse_projection(read_input(args.projection)) if args.projection else None
    verdict = distinguish(d1, d2, p, q, args.maxlen, spec, witness_len=args.witness_len)
    out.write(verdict.format())
    return EXIT_OK if verdict.distinguished else EXIT_UNDETERMINED


def cmd_reproduce(args, out):
    """K versus its mirror: both witnesses, the substituted table, the
    refutation, and the verdict."""
    K = k6_2()
    M = mirror(K)
    ok = True
    out.write(format_dga(K))
    report = check_axioms(K)
    out.write(f"degree check: {'ok' if report.degree_ok else 'FAILED'}; "
              f"d^2 = 0: {'ok' if report.d_squared_zero else 'FAILED'}\n")
    ok &= bool(report)
    A = K.algebra
    for y, z in (("a5 a3", "a1"), ("a11", "a9")):
        w = Witness(A.gen("a10"), A.parse(y), A.parse(z), 1, -1)
        check = verify_witness(K, w)
        ok &= bool(check)
        out.write(f"witness in {K.name}: {w}: {'valid' if check else check.reason}\n")
        wm = w.reversed()
        check = verify_witness(M, wm)
        ok &= bool(check)
        out.write(f"witness in {M.name}: {wm}: {'valid' if check else check.reason}\n")
    autos = [parse_automorphism(A, s) for s in K6_2_SUBSTITUTIONS]
    out.write("after " + ", ".join(str(a) for a in autos) + ":\n")
    S = apply_automorphisms(K, autos)
    for g, p in S.differential.items():
        out.write(f"  d {g} = {p}\n")
    autos, proj = k6_2_projection().bind(K)
    refutation = refute_unit_product(K, -1, 1, proj, args.maxlen, automorphisms=autos)
    ok &= refutation.status == "structural"
    out.write(refutation.format() + "\n")
    verdict = distinguish(K, M, 1, -1, args.maxlen)
    ok &= verdict.distinguished
    out.write(verdict.format())
    return EXIT_OK if ok else EXIT_UNDETERMINED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legdga", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify degree and d^2 = 0 axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mirror", help="reverse every monomial of the differential")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("subst", help="apply elementary automorphisms '<gen> -> <gen> + <poly>'")
    p.add_argument("file")
    p.add_argument("substitutions", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_subst)

    p = sub.add_parser("project", help="project differentials through a map file")
    p.add_argument("file")
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("nf", help="normal form of an expression under a rules file")
    p.add_argument("--rules", required=True)
    p.add_argument("--check-length", type=int, default=6)
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("witness", help="verify a unit-product witness")
    p.add_argument("file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--degrees", type=parse_degrees, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("distinguish", help="separate two DGAs by the unit-product obstruction")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--degrees", type=parse_degrees, required=True)
    p.add_argument("--maxlen", type=int, default=9)
    p.add_argument("--witness-len", type=int)
    p.add_argument("--projection")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("reproduce", help="run the full K versus M(K) argument")
    p.add_argument("--maxlen", type=int, default=9)
    p.set_defaults(func=cmd_reproduce)
    return parser


def run_command(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, AlgebraError, OSError) as exc:
        sys.stderr.write(f"legdga: error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
