"""Plain-text format for differential polynomials and systems.

Polynomial grammar::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := atom ['^' INT]
    atom    := NUMBER | NAME | DOPS '(' expr ')' | '(' expr ')'
    DOPS    := ('d' INT ['^' INT])+          e.g. d1^2d2

``dK`` is the K-th derivation (1-based), so ``3/2*d1^2(y1)*d2(u0_1)^3`` is
(3/2) * delta_1^2(y1) * delta_2(u0_1)^3.  Division is only by constants.

A system file is a list of ``key: value`` lines.  ``charset:`` and
``polys:`` open sections whose indented lines hold one polynomial each;
``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from .diffpoly import DerOp, DiffPoly, DiffVar, RingContext
from .ranking import Ranking

FORMAT_TAG = "pdchow-system/1"


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message, self.line, self.column = message, line, column
        super().__init__(f"line {line}, column {column}: {message}")


# printing -------------------------------------------------------------------

def format_op(op) -> str:
    return "".join(f"d{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(op) if a)


def format_var(ctx: RingContext, v: DiffVar) -> str:
    name = ctx.names[v.index]
    return f"{format_op(v.op)}({name})" if any(v.op) else name


def format_monomial(ctx: RingContext, mono, ranking: Ranking) -> str:
    ordered = sorted(mono, key=lambda ve: ranking.key(ve[0]), reverse=True)
    return "*".join(format_var(ctx, v) + (f"^{e}" if e > 1 else "") for v, e in ordered)


def sorted_terms(f: DiffPoly, ranking: Ranking | None = None):
    """Terms in export order: leader-major lexicographic, largest first."""
    ranking = ranking or Ranking(f.ctx, "orderly")
    return sorted(f.terms.items(), key=lambda kv: ranking.mono_key(kv[0]), reverse=True)


def print_poly(f: DiffPoly, ranking: Ranking | None = None) -> str:
    if f.is_zero():
        return "0"
    ranking = ranking or Ranking(f.ctx, "orderly")
    out = []
    for mono, c in sorted_terms(f, ranking):
        mag = abs(c)
        body = format_monomial(f.ctx, mono, ranking)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


# parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t]+)
  | (?P<dops>(?:d[0-9]+(?:\^[0-9]+)?)+)(?=\()
  | (?P<num>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)

_DOP = re.compile(r"d([0-9]+)(?:\^([0-9]+))?")


class _Parser:
    def __init__(self, text: str, ctx: RingContext, line: int = 1, col0: int = 1):
        self.ctx, self.line, self.col0 = ctx, line, col0
        self.toks = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if not mt:
                raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos)
            if mt.lastgroup != "ws":
                self.toks.append((mt.lastgroup, mt.group(), col0 + pos))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", self._end_col())

    def _end_col(self):
        if not self.toks:
            return self.col0
        kind, text, col = self.toks[-1]
        return col + len(text)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, text):
        tok = self.take()
        if tok[1] != text:
            raise ParseError(f"expected {text!r}, found {tok[1] or 'end of input'!r}", self.line, tok[2])
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def parse(self) -> DiffPoly:
        if not self.toks:
            raise self.error("empty expression")
        f = self.expr()
        if self.peek()[0] != "eof":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self) -> DiffPoly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term() * sign
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> DiffPoly:
        f = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()
            g = self.factor()
            if op[1] == "*":
                f = f * g
            else:
                if not g.is_constant() or g.is_zero():
                    raise ParseError("division only by nonzero constants", self.line, op[2])
                f = f * (1 / g.constant_value())
        return f

    def factor(self) -> DiffPoly:
        f = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a non-negative integer", tok)
            f = f ** int(tok[1])
        return f

    def atom(self) -> DiffPoly:
        kind, text, col = self.take()
        ctx = self.ctx
        if kind == "num":
            return DiffPoly.constant(ctx, int(text))
        if kind == "name":
            if text not in ctx.names:
                raise ParseError(f"unknown symbol {text!r}", self.line, col)
            return ctx.var(text)
        if kind == "dops":
            exps = [0] * ctx.m
            for mt in _DOP.finditer(text):
                k = int(mt.group(1))
                if not 1 <= k <= ctx.m:
                    raise ParseError("derivation index out of range", self.line, col + mt.start())
                exps[k - 1] += int(mt.group(2) or 1)
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return inner.differentiate(DerOp(exps))
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {text or 'end of input'!r}", self.line, col)


def parse_poly(text: str, ctx: RingContext, line: int = 1, column: int = 1) -> DiffPoly:
    return _Parser(text, ctx, line, column).parse()


# system files ---------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED_OP = re.compile(r"d[0-9]+$")
_KEYS = ("m", "vars", "ranking", "t_max", "block", "order", "support")


@dataclass
class SystemFile:
    ctx: RingContext
    ranking: str = "orderly"
    charset: list = field(default_factory=list)
    polys: list = field(default_factory=list)
    order: int | None = None  # quasi-generic order s
    support: list = field(default_factory=list)  # quasi-generic support monomials
    options: dict = field(default_factory=dict)  # t_max, block

    def __eq__(self, other):
        return isinstance(other, SystemFile) and (
            self.ctx, self.ranking, self.charset, self.polys, self.order, self.support, self.options) == (
            other.ctx, other.ranking, other.charset, other.polys, other.order, other.support, other.options)


def _int_value(value, line, col, key):
    if not re.fullmatch(r"[0-9]+", value):
        raise ParseError(f"{key} must be a non-negative integer", line, col)
    return int(value)


def parse_system(text: str) -> SystemFile:
    sections = {"charset": [], "polys": []}
    current = None
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        if body[0] in " \t":
            if current is None:
                raise ParseError("indented line outside a section", lineno, 1)
            col = len(body) - len(body.lstrip()) + 1
            sections[current].append((body.strip(), lineno, col))
            continue
        if ":" not in body:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, value = body.split(":", 1)
        key = key.strip()
        vcol = len(key) + 2 + (len(value) - len(value.lstrip()))
        value = value.strip()
        if key in sections:
            if value:
                raise ParseError(f"section {key!r} takes indented lines", lineno, vcol)
            current = key
            continue
        current = None
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, 1)
        if key in raw:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        raw[key] = (value, lineno, vcol)

    if "m" not in raw:
        raise ParseError("missing 'm' header", 1, 1)
    if "vars" not in raw:
        raise ParseError("missing 'vars' header", 1, 1)
    m = _int_value(*raw["m"], "m")
    if m < 1:
        raise ParseError("m must be at least 1", raw["m"][1], raw["m"][2])
    value, ln, col = raw["vars"]
    names = [x.strip() for x in value.split(",")]
    for nm in names:
        if not _NAME.match(nm) or _RESERVED_OP.match(nm):
            raise ParseError(f"invalid indeterminate name {nm!r}", ln, col)
    if len(set(names)) != len(names):
        raise ParseError("duplicate indeterminate name", ln, col)
    ctx = RingContext(m, tuple(names))
    sf = SystemFile(ctx)
    if "ranking" in raw:
        value, ln, col = raw["ranking"]
        if value not in ("orderly", "elimination", "elim"):
            raise ParseError("ranking must be 'orderly' or 'elimination'", ln, col)
        sf.ranking = "elimination" if value == "elim" else value
    for key in ("t_max", "block"):
        if key in raw:
            sf.options[key] = _int_value(*raw[key], key)
    if "order" in raw:
        sf.order = _int_value(*raw["order"], "order")
    if "support" in raw:
        value, ln, col = raw["support"]
        pos = 0
        for piece in value.split(","):
            start = col + pos + (len(piece) - len(piece.lstrip()))
            mono = parse_poly(piece.strip(), ctx, ln, start)
            if len(mono.terms) != 1 or list(mono.terms.values())[0] != 1:
                raise ParseError("support entries must be monic monomials", ln, start)
            sf.support.append(mono)
            pos += len(piece) + 1
    for key, target in (("charset", sf.charset), ("polys", sf.polys)):
        for body, ln, col in sections[key]:
            target.append(parse_poly(body, ctx, ln, col))
    return sf


def print_system(sf: SystemFile) -> str:
    lines = [f"# {FORMAT_TAG}", f"m: {sf.ctx.m}", f"vars: {', '.join(sf.ctx.names)}",
             f"ranking: {sf.ranking}"]
    for key in ("t_max", "block"):
        if key in sf.options:
            lines.append(f"{key}: {sf.options[key]}")
    if sf.order is not None:
        lines.append(f"order: {sf.order}")
    if sf.support:
        lines.append("support: " + ", ".join(print_poly(x) for x in sf.support))
    for key, items in (("charset", sf.charset), ("polys", sf.polys)):
        if items:
            lines.append(f"{key}:")
            lines.extend("  " + print_poly(f) for f in items)
    return "\n".join(lines) + "\n"
