"""Line-oriented text formats for DGAs, projection maps and rewrite rules.

DGA files::

    dga K6_2
    smooth 6_2
    tb -7
    maslov 0
    gen a1 : 1
    ...
    d a1 = 1 + a10 a5 a3

Projection map files declare target generators with ``gen``, images with
``map <src> -> <poly>``, ``default -> 0``, and optional changes of source
generators ``subst <gen> -> <gen> + <poly>`` applied before projecting.

Rule files hold optional ``gen`` lines plus ``rule: <word> -> <poly>`` and
``rel: <poly>`` lines.  ``#`` starts a comment everywhere.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .algebra import (
    AlgebraError,
    ExpressionSyntaxError,
    FreeAlgebra,
    Generator,
    UnknownGeneratorError,
    format_polynomial,
)
from .dga import ChekanovDGA, KnotMetadata
from .obstruction import ProjectionSpec
from .rewrite import RewriteRule, RewriteSystem, orient


class DgaSyntaxError(AlgebraError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DgaSemanticError(AlgebraError):
    def __init__(self, message: str, symbol: Optional[str] = None, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.symbol = symbol
        self.line = line


_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_GEN = re.compile(rf"gen\s+({_NAME})\s*:\s*([+-]?\d+)\s*$")
_DIFF = re.compile(rf"d\s+({_NAME})\s*=(.*)$")
_INT = re.compile(r"[+-]?\d+$")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if stripped:
            indent = len(body) - len(body.lstrip())
            yield no, indent, stripped


def _parse_expr(algebra: FreeAlgebra, text: str, line: int, offset: int):
    try:
        return algebra.parse(text)
    except UnknownGeneratorError as exc:
        raise DgaSemanticError(f"unknown generator {exc.name}", exc.name, line) from None
    except ExpressionSyntaxError as exc:
        raise DgaSyntaxError(str(exc).split(": ", 1)[1], line, offset + exc.column) from None


def _parse_gen(rest: str, no: int, indent: int, gens: List[Generator]):
    m = _GEN.match(rest)
    if not m:
        raise DgaSyntaxError("expected 'gen <name> : <degree>'", no, indent + 1)
    name, deg = m.group(1), int(m.group(2))
    if any(g.name == name for g in gens):
        raise DgaSemanticError(f"duplicate declaration of {name}", name, no)
    gens.append(Generator(name, deg))


def parse_dga(text: str) -> ChekanovDGA:
    header = {}
    gens: List[Generator] = []
    diffs: List[Tuple[int, str, str, int]] = []
    for no, indent, line in _lines(text):
        key = line.split(None, 1)[0]
        rest = line[len(key):].strip()
        if key in ("dga", "smooth", "tb", "maslov"):
            if key in header:
                raise DgaSemanticError(f"duplicate '{key}' line", key, no)
            if not rest:
                raise DgaSyntaxError(f"'{key}' needs a value", no, indent + len(key) + 1)
            if key in ("tb", "maslov") and not _INT.match(rest):
                raise DgaSyntaxError(f"'{key}' needs an integer", no,
                                     indent + line.index(rest) + 1)
            header[key] = rest
        elif key == "gen":
            if diffs:
                raise DgaSyntaxError("generator declared after differentials", no, indent + 1)
            _parse_gen(line, no, indent, gens)
        elif key == "d":
            m = _DIFF.match(line)
            if not m:
                raise DgaSyntaxError("expected 'd <name> = <polynomial>'", no, indent + 1)
            diffs.append((no, m.group(1), m.group(2), indent + m.start(2)))
        else:
            raise DgaSyntaxError(f"unknown directive {key!r}", no, indent + 1)

    meta = KnotMetadata(header.get("dga", "unnamed"), header.get("smooth"),
                        int(header["tb"]) if "tb" in header else None,
                        int(header.get("maslov", 0)))
    algebra = FreeAlgebra(tuple(gens), meta.grading_modulus)
    table = {}
    for no, name, expr, offset in diffs:
        if name not in algebra:
            raise DgaSemanticError(f"unknown generator {name}", name, no)
        if name in table:
            raise DgaSemanticError(f"duplicate differential for {name}", name, no)
        table[name] = _parse_expr(algebra, expr, no, offset)
    for name in algebra.names:
        if name not in table:
            raise DgaSemanticError(f"missing differential for {name}", name)
    return ChekanovDGA(algebra, table, meta)


def format_dga(dga: ChekanovDGA) -> str:
    meta = dga.metadata
    out = [f"dga {meta.name}"]
    if meta.smooth_type is not None:
        out.append(f"smooth {meta.smooth_type}")
    if meta.tb is not None:
        out.append(f"tb {meta.tb}")
    out.append(f"maslov {meta.maslov}")
    out.extend(f"gen {g.name} : {g.degree}" for g in dga.algebra.generators)
    out.extend(f"d {g} = {format_polynomial(p)}" for g, p in dga.differential.items())
    return "\n".join(out) + "\n"


def _split_arrow(rest: str, no: int, indent: int, what: str):
    if "->" not in rest:
        raise DgaSyntaxError(f"expected '{what}'", no, indent + 1)
    lhs, rhs = rest.split("->", 1)
    return lhs.strip(), rhs


def parse_projection(text: str) -> ProjectionSpec:
    gens: List[Generator] = []
    maps: List[Tuple[int, str, str, int]] = []
    substs: List[str] = []
    default_zero = False
    for no, indent, line in _lines(text):
        key = line.split(None, 1)[0]
        if key == "gen":
            _parse_gen(line, no, indent, gens)
        elif key == "map":
            src, rhs = _split_arrow(line[3:], no, indent, "map <gen> -> <poly>")
            if not re.fullmatch(_NAME, src):
                raise DgaSyntaxError(f"bad source generator {src!r}", no, indent + 5)
            if any(m[1] == src for m in maps):
                raise DgaSemanticError(f"duplicate map for {src}", src, no)
            maps.append((no, src, rhs, indent + line.index("->") + 2))
        elif key == "default":
            _, rhs = _split_arrow(line, no, indent, "default -> 0")
            if rhs.strip() != "0":
                raise DgaSyntaxError("only 'default -> 0' is supported", no, indent + 1)
            default_zero = True
        elif key == "subst":
            substs.append(line[5:].strip())
        else:
            raise DgaSyntaxError(f"unknown directive {key!r}", no, indent + 1)
    target = FreeAlgebra(tuple(gens))
    images = {src: _parse_expr(target, rhs, no, off) for no, src, rhs, off in maps}
    return ProjectionSpec(target, images, default_zero, tuple(substs))


def format_projection(spec: ProjectionSpec) -> str:
    out = [f"subst {s}" for s in spec.substitutions]
    out.extend(f"gen {g.name} : {g.degree}" for g in spec.target.generators)
    out.extend(f"map {src} -> {img}" for src, img in spec.images.items())
    if spec.default_zero:
        out.append("default -> 0")
    return "\n".join(out) + "\n"


_WORD_IN_RULE = re.compile(_NAME)


def parse_rules(text: str, extra_names=()) -> RewriteSystem:
    """Parse a rules file.  Without ``gen`` lines, every name used (including
    ``extra_names``) becomes a degree-0 generator."""
    gens: List[Generator] = []
    entries = []
    for no, indent, line in _lines(text):
        if line.startswith("gen ") or line == "gen":
            _parse_gen(line, no, indent, gens)
        elif line.startswith("rule:"):
            lhs, rhs = _split_arrow(line[5:], no, indent, "rule: <word> -> <poly>")
            entries.append(("rule", no, lhs, rhs))
        elif line.startswith("rel:"):
            entries.append(("rel", no, None, line[4:]))
        else:
            raise DgaSyntaxError("expected 'gen', 'rule:' or 'rel:'", no, indent + 1)
    if not gens:
        seen = dict.fromkeys(extra_names)
        for _, _, lhs, rhs in entries:
            for part in (lhs or "", rhs):
                seen.update(dict.fromkeys(_WORD_IN_RULE.findall(part)))
        gens = [Generator(n, 0) for n in seen]
    algebra = FreeAlgebra(tuple(gens))
    rules = []
    for kind, no, lhs, rhs in entries:
        try:
            if kind == "rule":
                word = tuple(lhs.split())
                for g in word:
                    if g not in algebra:
                        raise DgaSemanticError(f"unknown generator {g}", g, no)
                rule = RewriteRule(word, _parse_expr(algebra, rhs, no, 0))
            else:
                rule = orient(_parse_expr(algebra, rhs, no, 0))
        except (DgaSemanticError, DgaSyntaxError):
            raise
        except AlgebraError as exc:
            raise DgaSemanticError(str(exc), line=no) from None
        rules.append(rule)
    try:
        return RewriteSystem(algebra, tuple(rules))
    except AlgebraError as exc:
        raise DgaSemanticError(str(exc)) from None
