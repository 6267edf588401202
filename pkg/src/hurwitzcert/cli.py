"""Problem-file parsing, command dispatch and JSON reports.

Input format (hand-written, # comments, whitespace-insensitive in rows):

    field x^4 + 2*x^3 + x^2 - 2 root (79/100, 4/5)
    dim 3
    matrix
    2, -1, -1
    -1, 2, -x
    -1, -x, 2

or `field rational` for plain Q. Entry expressions use rational literals
p/q, the single-letter generator of the field polynomial, + - * ^ and
parentheses; ^ takes a nonnegative integer exponent and binds tightest,
then unary minus, then *, then + and -.

Commands write one JSON report to stdout (sorted keys, deterministic bytes
for identical input and flags) and a human-readable message to stderr on
failure. Exit codes: 0 the command ran to a verdict (Inconclusive included),
2 parse or validation error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .errors import (
    DimensionMismatch,
    FieldMismatch,
    InputError,
    InternalInvariantError,
    ParseError,
)
from .exactlinalg import Matrix
from .finiteness import CertifyCaps, certify, element_order, group_closure
from .hurwitz import TupleState, orbit
from .numberfield import NumberField
from .reflection import (
    CartanMatrix,
    cartan_blocks,
    coleman_charpoly,
    coleman_decompose,
    coxeter_element,
    reflections_from_cartan,
)

COUNTEREXAMPLE_PROBLEM = """\
# Rank-3 symmetric Cartan matrix over the quartic field where the generator
# satisfies (x^2 + x)^2 = 2. The generated reflection group is infinite while
# the Coxeter element has order 8.
field x^4 + 2*x^3 + x^2 - 2 root (79/100, 4/5)
dim 3
matrix
2, -1, -1
-1, 2, -x
-1, -x, 2
"""


# ---------------------------------------------------------------------------
# tokenizer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str       # "int" | "word" | "op"
    value: object
    line: int
    col: int


_OPS = set("+-*^(),/")


def _tokenize_line(text, lineno):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), lineno, col))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            tokens.append(_Token("word", text[i:j], lineno, col))
            i = j
        elif ch in _OPS:
            tokens.append(_Token("op", ch, lineno, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", lineno, col)
    return tokens


# ---------------------------------------------------------------------------
# expression parsing (shared by the field polynomial and matrix entries)
# ---------------------------------------------------------------------------

class _ExprParser:
    """Recursive-descent parser evaluating directly in a value context.

    The context supplies rational(value), symbol(name, token) and the usual
    ring operations, so the same grammar serves both the field polynomial
    (values are polynomials in the yet-unbound generator) and matrix entries
    (values are FieldElements).
    """

    def __init__(self, tokens, context, line):
        self.tokens = tokens
        self.pos = 0
        self.ctx = context
        self.line = line

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line)
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.next()
        if tok.kind != "op" or tok.value != op:
            raise ParseError(f"expected {op!r}", tok.line, tok.col)
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.value in "+-":
                self.next()
                rhs = self.term()
                value = self.ctx.add(value, rhs) if tok.value == "+" else self.ctx.sub(value, rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.value == "*":
                self.next()
                value = self.ctx.mul(value, self.factor())
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.value == "-":
            self.next()
            return self.ctx.neg(self.factor())
        if tok is not None and tok.kind == "op" and tok.value == "+":
            self.next()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.value == "^":
            self.next()
            return self.ctx.pow(base, self.exponent())
        return base

    def exponent(self):
        tok = self.next()
        if tok.kind != "int":
            raise ParseError("exponent must be a nonnegative integer", tok.line, tok.col)
        value = tok.value
        nxt = self.peek()
        if nxt is not None and nxt.kind == "op" and nxt.value == "^":
            self.next()
            value = value ** self.exponent()
        return value

    def atom(self):
        tok = self.next()
        if tok.kind == "int":
            return self.ctx.rational(self._maybe_fraction(tok))
        if tok.kind == "word":
            return self.ctx.symbol(tok.value, tok)
        if tok.kind == "op" and tok.value == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)

    def _maybe_fraction(self, tok):
        nxt = self.peek()
        if nxt is not None and nxt.kind == "op" and nxt.value == "/":
            self.next()
            den_tok = self.next()
            if den_tok.kind != "int":
                raise ParseError("expected an integer denominator", den_tok.line, den_tok.col)
            if den_tok.value == 0:
                raise ParseError("zero denominator", den_tok.line, den_tok.col)
            return Fraction(tok.value, den_tok.value)
        return Fraction(tok.value)


class _PolyContext:
    """Values are polynomials in a single symbol, coefficients Fractions ascending."""

    def __init__(self):
        self.symbol_name = None

    def rational(self, q):
        return [q]

    def symbol(self, name, tok):
        if len(name) != 1:
            raise ParseError(f"unknown word {name!r}", tok.line, tok.col)
        if self.symbol_name is None:
            self.symbol_name = name
        elif name != self.symbol_name:
            raise ParseError(f"two different symbols {self.symbol_name!r} and {name!r}",
                             tok.line, tok.col)
        return [Fraction(0), Fraction(1)]

    def add(self, a, b):
        n = max(len(a), len(b))
        a = a + [Fraction(0)] * (n - len(a))
        b = b + [Fraction(0)] * (n - len(b))
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return self.add(a, [-x for x in b])

    def neg(self, a):
        return [-x for x in a]

    def mul(self, a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    def pow(self, a, k):
        out = [Fraction(1)]
        for _ in range(k):
            out = self.mul(out, a)
        return out


class _FieldContext:
    """Values are FieldElements of a fixed field with a declared generator symbol."""

    def __init__(self, field, symbol):
        self.field = field
        self.symbol_name = symbol

    def rational(self, q):
        return self.field.element(q)

    def symbol(self, name, tok):
        if self.symbol_name is None:
            raise FieldMismatch(
                f"symbol {name!r} used at line {tok.line} but the field is rational")
        if name != self.symbol_name:
            raise ParseError(
                f"unknown symbol {name!r} (field generator is {self.symbol_name!r})",
                tok.line, tok.col)
        return self.field.gen()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, k):
        return a ** k


# ---------------------------------------------------------------------------
# problem files
# ---------------------------------------------------------------------------

@dataclass
class ProblemFile:
    field: NumberField
    symbol: str | None
    dimension: int
    entries: tuple

    def matrix(self):
        return Matrix.from_rows(self.field, self.entries)

    def cartan(self):
        return CartanMatrix(self.matrix())


def parse_problem(text):
    """Parse a problem document into a validated ProblemFile."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty problem file", 1)

    cursor = 0

    def take():
        nonlocal cursor
        if cursor >= len(lines):
            last = lines[-1][0] if lines else 1
            raise ParseError("unexpected end of file", last)
        item = lines[cursor]
        cursor += 1
        return item

    # field declaration
    lineno, body = take()
    tokens = _tokenize_line(body, lineno)
    if not tokens or tokens[0].kind != "word" or tokens[0].value != "field":
        raise ParseError("expected a `field` declaration", lineno, 1)
    if len(tokens) >= 2 and tokens[1].kind == "word" and tokens[1].value == "rational":
        if len(tokens) > 2:
            raise ParseError("unexpected tokens after `field rational`",
                             lineno, tokens[2].col)
        field = NumberField.rationals()
        symbol = None
    else:
        root_at = next((k for k, t in enumerate(tokens)
                        if t.kind == "word" and t.value == "root"), None)
        if root_at is None:
            raise ParseError("expected `root (lo, hi)` after the field polynomial", lineno)
        ctx = _PolyContext()
        poly = _ExprParser(tokens[1:root_at], ctx, lineno).parse()
        if ctx.symbol_name is None:
            raise ParseError("field polynomial must use a generator symbol", lineno)
        interval_parser = _ExprParser(tokens[root_at + 1:], None, lineno)
        interval_parser.expect_op("(")
        lo = _parse_signed_rational(interval_parser)
        interval_parser.expect_op(",")
        hi = _parse_signed_rational(interval_parser)
        interval_parser.expect_op(")")
        if interval_parser.peek() is not None:
            tok = interval_parser.peek()
            raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)
        field = NumberField(poly, (lo, hi))
        symbol = ctx.symbol_name

    # dimension
    lineno, body = take()
    tokens = _tokenize_line(body, lineno)
    if (len(tokens) != 2 or tokens[0].kind != "word" or tokens[0].value != "dim"
            or tokens[1].kind != "int"):
        raise ParseError("expected `dim <n>`", lineno, 1)
    dimension = tokens[1].value
    if dimension < 1:
        raise ParseError("dimension must be >= 1", lineno, tokens[1].col)

    # matrix header
    lineno, body = take()
    tokens = _tokenize_line(body, lineno)
    if len(tokens) != 1 or tokens[0].kind != "word" or tokens[0].value != "matrix":
        raise ParseError("expected `matrix`", lineno, 1)

    # rows
    ctx = _FieldContext(field, symbol)
    rows = []
    for _ in range(dimension):
        if cursor >= len(lines):
            raise DimensionMismatch(
                f"expected {dimension} matrix rows, found {len(rows)}")
        lineno, body = take()
        tokens = _tokenize_line(body, lineno)
        groups = [[]]
        for t in tokens:
            if t.kind == "op" and t.value == ",":
                groups.append([])
            else:
                groups[-1].append(t)
        if any(not g for g in groups):
            raise ParseError("empty matrix entry", lineno)
        if len(groups) != dimension:
            raise DimensionMismatch(
                f"row {len(rows) + 1} has {len(groups)} entries, expected {dimension}"
                f" (line {lineno})")
        rows.append(tuple(_ExprParser(g, ctx, lineno).parse() for g in groups))
    if cursor < len(lines):
        lineno, _ = lines[cursor]
        raise ParseError("unexpected content after the matrix rows", lineno)
    return ProblemFile(field, symbol, dimension, tuple(rows))


def _parse_signed_rational(parser):
    negative = False
    tok = parser.peek()
    while tok is not None and tok.kind == "op" and tok.value in "+-":
        parser.next()
        if tok.value == "-":
            negative = not negative
        tok = parser.peek()
    tok = parser.next()
    if tok.kind != "int":
        raise ParseError("expected a rational number", tok.line, tok.col)
    value = parser._maybe_fraction(tok)
    return -value if negative else value


# ---------------------------------------------------------------------------
# serialization back to the text format
# ---------------------------------------------------------------------------

def _poly_text(coeffs, symbol):
    """Render Fraction coefficients (ascending) in descending-power text."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mon = symbol if k == 1 else f"{symbol}^{k}"
            body = mon if mag == 1 else f"{mag}*{mon}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    first_neg, first = terms[0]
    out = ("-" if first_neg else "") + first
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


def fe_text(element, symbol):
    """Canonical text form of a field element in the problem-file language."""
    return _poly_text(element.coeffs(), symbol or "x")


def problem_to_text(problem):
    """Serialize a ProblemFile; parse_problem of the output is identical."""
    lines = []
    if problem.field.degree == 1:
        lines.append("field rational")
    else:
        lo, hi = problem.field.root_interval
        poly = _poly_text([Fraction(c) for c in problem.field.minpoly], problem.symbol)
        lines.append(f"field {poly} root ({lo}, {hi})")
    lines.append(f"dim {problem.dimension}")
    lines.append("matrix")
    for row in problem.entries:
        lines.append(", ".join(fe_text(e, problem.symbol) for e in row))
    return "\n".join(lines) + "\n"


def counterexample_problem():
    """The built-in footnote matrix as a parsed ProblemFile."""
    return parse_problem(COUNTEREXAMPLE_PROBLEM)


# ---------------------------------------------------------------------------
# JSON report pieces
# ---------------------------------------------------------------------------

def _fe_json(e):
    return {"coeffs": [str(c) for c in e.coeffs()], "approx": e.approx()}


def _matrix_json(m):
    return [[_fe_json(m.entry(i, j)) for j in range(m.ncols)] for i in range(m.nrows)]


def _poly_json(p):
    return [_fe_json(c) for c in p.coeffs]


def _field_json(problem):
    f = problem.field
    if f.degree == 1:
        return {"kind": "rational", "degree": 1, "symbol": None,
                "minpoly": None, "root_interval": None}
    lo, hi = f.root_interval
    return {"kind": "algebraic",
            "degree": f.degree,
            "symbol": problem.symbol,
            "minpoly": _poly_text([Fraction(c) for c in f.minpoly], problem.symbol),
            "root_interval": [str(lo), str(hi)]}


def _embeddings_json(field):
    out = []
    for e in field.embeddings():
        z = e.approx()
        out.append({"index": e.index, "is_real": e.is_real,
                    "is_distinguished": e.is_distinguished,
                    "approx": [z.real, z.imag]})
    return out


def _order_json(o):
    data = {"verdict": o.verdict}
    if o.order is not None:
        data["order"] = o.order
    if o.cap is not None:
        data["cap"] = o.cap
    if o.witness is not None:
        w = o.witness
        if w.kind == "eigenvalue_box":
            b = w.box
            z = b.approx()
            data["witness"] = {
                "kind": w.kind,
                "embedding": w.embedding_index,
                "eigenvalue_sum": {"re": [str(b.re_lo), str(b.re_hi)],
                                   "im": [str(b.im_lo), str(b.im_hi)]},
                "approx": [z.real, z.imag],
            }
        else:
            data["witness"] = {"kind": w.kind, "note": w.note}
    return data


def _state_key_string(key):
    mats = []
    for _nr, _nc, entries in key:
        parts = []
        for num, den in entries:
            s = ",".join(str(x) for x in num)
            parts.append(s if den == 1 else f"{s}/{den}")
        mats.append(";".join(parts))
    return "|".join(mats)


def _orbit_json(res, emit_states=False):
    data = {"status": res.status, "size": res.size, "cap": res.cap}
    if emit_states:
        data["states"] = [_state_key_string(key) for key in res.keys]
    return data


def _closure_json(res):
    data = {"status": res.status, "cap": res.cap}
    if res.order is not None:
        data["order"] = res.order
    return data


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _report_analyze(problem, args):
    cartan = problem.cartan()
    m = cartan.matrix
    symmetric = cartan.is_symmetric
    det = m.det()
    report = {
        "command": "analyze",
        "input": args.input,
        "field": _field_json(problem),
        "dimension": problem.dimension,
        "cartan": _matrix_json(m),
        "symmetric": symmetric,
        "blocks": cartan_blocks(cartan),
        "determinant": _fe_json(det),
        "invertible": not det.is_zero(),
        "leading_principal_minors": [_fe_json(x) for x in m.leading_principal_minors()],
        "positive_definite": m.is_positive_definite() if symmetric else None,
    }
    return report


def _report_coxeter(problem, args):
    cartan = problem.cartan()
    dec = coleman_decompose(cartan)
    refl = reflections_from_cartan(cartan)
    c = coxeter_element(refl)
    chi_product = c.charpoly()
    chi_dec = coleman_charpoly(cartan)
    det = cartan.matrix.det()
    chi_at_one = chi_dec(1)
    return {
        "command": "coxeter",
        "input": args.input,
        "field": _field_json(problem),
        "dimension": problem.dimension,
        "decomposition": {"upper": _matrix_json(dec.upper),
                          "lower": _matrix_json(dec.lower)},
        "coxeter_matrix": _matrix_json(c),
        "charpoly": _poly_json(chi_product),
        "charpoly_from_decomposition": _poly_json(chi_dec),
        "charpolys_match": chi_product == chi_dec,
        "determinant": _fe_json(det),
        "charpoly_at_one": _fe_json(chi_at_one),
        "det_matches_charpoly_at_one": chi_at_one == det,
        "coxeter_order": _order_json(element_order(c, 512)),
    }


def _report_orbit(problem, args):
    cartan = problem.cartan()
    state = TupleState.from_reflections(reflections_from_cartan(cartan))
    res = orbit(state, args.cap, keep_states=False)
    report = {
        "command": "orbit",
        "input": args.input,
        "field": _field_json(problem),
        "dimension": problem.dimension,
    }
    report.update(_orbit_json(res, emit_states=args.emit_states))
    return report


def _report_group(problem, args):
    cartan = problem.cartan()
    refl = reflections_from_cartan(cartan)
    res = group_closure(refl.refs, args.cap)
    report = {
        "command": "group",
        "input": args.input,
        "field": _field_json(problem),
        "dimension": problem.dimension,
    }
    report.update(_closure_json(res))
    return report


def _report_certify(problem, args, command, input_name):
    cartan = problem.cartan()
    caps = CertifyCaps(closure_cap=args.cap, force_closure=args.force_closure)
    rep = certify(cartan, caps)
    return {
        "command": command,
        "input": input_name,
        "field": _field_json(problem),
        "dimension": problem.dimension,
        "embeddings": _embeddings_json(problem.field),
        "cartan": _matrix_json(cartan.matrix),
        "symmetric": True,
        "blocks": rep.blocks,
        "determinant": _fe_json(rep.determinant),
        "invertible": rep.invertible,
        "positive_definite": rep.positive_definite,
        "galois_positive_definite": [
            {"embedding": g.embedding_index, "is_real": g.is_real,
             "positive_definite": g.positive_definite}
            for g in rep.galois],
        "pair_orders": [[_order_json(o) for o in row] for row in rep.pair_orders],
        "degenerate_pairs": [list(p) for p in rep.degenerate_pairs],
        "coxeter_order": _order_json(rep.coxeter_order),
        "orbit_probe": _orbit_json(rep.orbit_probe),
        "closure": _closure_json(rep.closure) if rep.closure is not None else None,
        "closure_skipped": rep.closure_skipped,
        "conclusion": rep.conclusion,
    }


_REQUIRED_KEYS = {
    "analyze": {"command", "input", "field", "dimension", "cartan", "symmetric",
                "blocks", "determinant", "invertible", "leading_principal_minors",
                "positive_definite"},
    "coxeter": {"command", "input", "field", "dimension", "decomposition",
                "coxeter_matrix", "charpoly", "charpoly_from_decomposition",
                "charpolys_match", "determinant", "charpoly_at_one",
                "det_matches_charpoly_at_one", "coxeter_order"},
    "orbit": {"command", "input", "field", "dimension", "status", "size", "cap"},
    "group": {"command", "input", "field", "dimension", "status", "cap"},
    "certify": {"command", "input", "field", "dimension", "embeddings", "cartan",
                "symmetric", "blocks", "determinant", "invertible",
                "positive_definite", "galois_positive_definite", "pair_orders",
                "degenerate_pairs", "coxeter_order", "orbit_probe", "closure",
                "closure_skipped", "conclusion"},
}
_REQUIRED_KEYS["counterexample"] = _REQUIRED_KEYS["certify"]


def validate_report(report):
    """Check a report against the published schema; raises ValueError."""
    if not isinstance(report, dict) or "command" not in report:
        raise ValueError("report must be an object with a command")
    command = report["command"]
    required = _REQUIRED_KEYS.get(command)
    if required is None:
        raise ValueError(f"unknown command {command!r}")
    missing = required - set(report)
    if missing:
        raise ValueError(f"missing keys: {sorted(missing)}")
    if command in ("certify", "counterexample"):
        if report["conclusion"] not in ("finite_certified", "infinite_certified",
                                        "inconclusive"):
            raise ValueError("bad conclusion")
        if report["conclusion"] == "finite_certified":
            if not (report["closure"] and report["closure"].get("status") == "finite"):
                raise ValueError("finite_certified requires a finite closure")
        if report["conclusion"] == "infinite_certified":
            orders = [o for row in report["pair_orders"] for o in row]
            orders.append(report["coxeter_order"])
            if not any(o["verdict"] == "infinite" for o in orders):
                raise ValueError("infinite_certified requires an infinite certificate")
    if command == "orbit" and report["status"] not in ("complete", "cap_exceeded"):
        raise ValueError("bad orbit status")
    if command == "group" and report["status"] not in ("finite", "cap_exceeded"):
        raise ValueError("bad closure status")
    return True


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hurwitzcert",
        description="Exact reflection tuples, Hurwitz orbits and finiteness certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="problem file path")
        p.add_argument("--json-indent", type=int, default=2,
                       help="indentation of the JSON report; 0 for compact output")

    p = sub.add_parser("analyze", help="validate the Cartan matrix; blocks, det, minors, PD")
    add_common(p)
    p = sub.add_parser("coxeter", help="Coxeter element, triangular decomposition, charpoly")
    add_common(p)
    p = sub.add_parser("orbit", help="Hurwitz orbit enumeration")
    add_common(p)
    p.add_argument("--cap", type=_positive_int, default=10000)
    p.add_argument("--emit-states", action="store_true")
    p = sub.add_parser("group", help="group closure enumeration")
    add_common(p)
    p.add_argument("--cap", type=_positive_int, default=20000)
    p = sub.add_parser("certify", help="full finiteness certification report")
    add_common(p)
    p.add_argument("--cap", type=_positive_int, default=20000, help="group closure cap")
    p.add_argument("--force-closure", action="store_true")
    p = sub.add_parser("counterexample", help="certify the built-in footnote matrix")
    add_common(p, needs_input=False)
    p.add_argument("--cap", type=_positive_int, default=20000, help="group closure cap")
    p.add_argument("--force-closure", action="store_true")
    return parser


def run(argv):
    """Dispatch one command; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "counterexample":
            problem = counterexample_problem()
            args.input = "builtin"
            report = _report_certify(problem, args, "counterexample", "builtin")
        else:
            try:
                with open(args.input, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
                return 2
            problem = parse_problem(text)
            if args.command == "analyze":
                report = _report_analyze(problem, args)
            elif args.command == "coxeter":
                report = _report_coxeter(problem, args)
            elif args.command == "orbit":
                report = _report_orbit(problem, args)
            elif args.command == "group":
                report = _report_group(problem, args)
            else:
                report = _report_certify(problem, args, "certify", args.input)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    indent = args.json_indent if args.json_indent > 0 else None
    print(json.dumps(report, indent=indent, sort_keys=True))
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
