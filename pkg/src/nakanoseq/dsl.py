"""Expression DSL for exponent sequences.

Grammar (whitespace insignificant)::

    expr    := atom { "+" atom }
    atom    := drift | linear | const | "blocks" | "inf"
             | "merge(" ("even"|"odd") ":" expr "," expr ")"
             | "prefix(" index "=" number { "," index "=" number } ";" expr ")"
             | ("absdiff" | "rn" | "nakexp") "(" expr "," expr ")"
             | "recip(" expr ")"
    drift   := number ("+"|"-") number "/n" ["^" number]
    linear  := [number "*"] "n" ["+"|"-" number]
    const   := number | "inf"

Drift and linear forms munch maximally, except that an additive number is
left to the enclosing sum when it starts a drift of its own (so
``n + 1 + 1/n`` is a linear plus a drift).  ``print_expression`` emits the
canonical form; parse → print → parse is the identity on the family.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import exponents as E
from .errors import ParseError
from .indexsets import Evens, Odds

INF = math.inf

_TOKEN_RE = re.compile(
    r"""
    (?P<NUMBER>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
  | (?P<IDENT>[A-Za-z_]+)
  | (?P<SYM>[+\-*/^(),:;=])
  | (?P<WS>\s+)
  | (?P<BAD>.)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | IDENT | SYM | EOF
    text: str
    pos: int


def _tokenize(source: str) -> list[_Token]:
    out = []
    for m in _TOKEN_RE.finditer(source):
        kind = m.lastgroup
        if kind == "WS":
            continue
        if kind == "BAD":
            raise ParseError(f"unexpected character {m.group()!r}", source, m.start())
        out.append(_Token(kind, m.group(), m.start()))
    out.append(_Token("EOF", "", len(source)))
    return out


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    # -- token plumbing -----------------------------------------------------

    def peek(self, ahead: int = 0) -> _Token:
        j = min(self.i + ahead, len(self.tokens) - 1)
        return self.tokens[j]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.source, tok.pos)

    def expect_sym(self, sym: str) -> _Token:
        tok = self.peek()
        if tok.kind != "SYM" or tok.text != sym:
            self.error(f"expected {sym!r}", tok)
        return self.advance()

    def accept_sym(self, sym: str) -> bool:
        tok = self.peek()
        if tok.kind == "SYM" and tok.text == sym:
            self.advance()
            return True
        return False

    def number(self) -> float:
        tok = self.peek()
        if tok.kind != "NUMBER":
            self.error("expected a number", tok)
        self.advance()
        return float(tok.text)

    def _is_ident(self, tok: _Token, name: str) -> bool:
        return tok.kind == "IDENT" and tok.text == name

    # -- pattern matchers with backtracking ---------------------------------

    def _drift_starts_at(self, j: int) -> bool:
        """Tokens j.. look like: NUMBER (+|-) NUMBER / n."""
        t = self.tokens
        return (
            self.peek(j).kind == "NUMBER"
            and self.peek(j + 1).kind == "SYM"
            and self.peek(j + 1).text in "+-"
            and self.peek(j + 2).kind == "NUMBER"
            and self.peek(j + 3).kind == "SYM"
            and self.peek(j + 3).text == "/"
            and self._is_ident(self.peek(j + 4), "n")
        )

    def try_drift(self):
        if not self._drift_starts_at(0):
            return None
        limit = self.number()
        sign = 1.0 if self.advance().text == "+" else -1.0
        coeff = self.number()
        self.expect_sym("/")
        self.advance()  # the 'n'
        decay = 1.0
        if self.peek().kind == "SYM" and self.peek().text == "^":
            self.advance()
            decay = self.number()
        return E.RationalDrift(limit, sign * coeff, decay)

    def try_linear(self):
        mark = self.i
        slope = 1.0
        if self.peek().kind == "NUMBER":
            if not (self.peek(1).kind == "SYM" and self.peek(1).text == "*"):
                return None
            slope = self.number()
            self.advance()  # '*'
        if not self._is_ident(self.peek(), "n"):
            self.i = mark
            return None
        self.advance()
        intercept = 0.0
        tok = self.peek()
        if tok.kind == "SYM" and tok.text in "+-" and self.peek(1).kind == "NUMBER":
            # leave the number to the enclosing sum when it starts a drift
            if not (tok.text == "+" and self._drift_starts_at(1)):
                sign = 1.0 if self.advance().text == "+" else -1.0
                intercept = sign * self.number()
        return E.Linear(slope, intercept)

    # -- grammar ------------------------------------------------------------

    def parse_atom(self) -> E.ExponentSequence:
        node = self.try_drift()
        if node is not None:
            return node
        node = self.try_linear()
        if node is not None:
            return node
        tok = self.peek()
        if tok.kind == "NUMBER":
            return E.Const(self.number())
        if tok.kind == "IDENT":
            name = tok.text
            if name == "inf":
                self.advance()
                return E.Const(INF)
            if name == "blocks":
                self.advance()
                return E.BlockRepeat()
            if name == "merge":
                self.advance()
                self.expect_sym("(")
                set_tok = self.peek()
                if self._is_ident(set_tok, "even"):
                    index_set = Evens()
                elif self._is_ident(set_tok, "odd"):
                    index_set = Odds()
                else:
                    self.error("expected 'even' or 'odd'", set_tok)
                self.advance()
                self.expect_sym(":")
                on_set = self.parse_expr()
                self.expect_sym(",")
                off_set = self.parse_expr()
                self.expect_sym(")")
                return E.Merge(index_set, on_set, off_set)
            if name == "prefix":
                self.advance()
                self.expect_sym("(")
                overrides = []
                while True:
                    idx_tok = self.peek()
                    idx = self.number()
                    if idx != int(idx):
                        self.error("override index must be an integer", idx_tok)
                    self.expect_sym("=")
                    overrides.append((int(idx), self.number()))
                    if not self.accept_sym(","):
                        break
                self.expect_sym(";")
                tail = self.parse_expr()
                self.expect_sym(")")
                return E.Prefix(tuple(overrides), tail)
            if name in ("absdiff", "rn", "nakexp"):
                self.advance()
                self.expect_sym("(")
                left = self.parse_expr()
                self.expect_sym(",")
                right = self.parse_expr()
                self.expect_sym(")")
                cls = {"absdiff": E.AbsDiff, "rn": E.RnOf, "nakexp": E.NakanoExponent}[name]
                return cls(left, right)
            if name == "recip":
                self.advance()
                self.expect_sym("(")
                inner = self.parse_expr()
                self.expect_sym(")")
                return E.Recip(inner)
            self.error(f"unknown name {name!r}", tok)
        self.error("expected an expression", tok)

    def parse_expr(self) -> E.ExponentSequence:
        node = self.parse_atom()
        while self.accept_sym("+"):
            node = E.Sum(node, self.parse_atom())
        return node

    def parse(self) -> E.ExponentSequence:
        node = self.parse_expr()
        tok = self.peek()
        if tok.kind != "EOF":
            self.error("unexpected trailing input", tok)
        return node


def parse_expression(source: str) -> E.ExponentSequence:
    """Parse DSL text to an exponent-sequence descriptor."""
    return _Parser(source).parse()


# --------------------------------------------------------------------------
# canonical printer
# --------------------------------------------------------------------------


def _fmt(value: float) -> str:
    if value == INF:
        return "inf"
    f = float(value)
    if f.is_integer() and abs(f) < 1e16:
        return str(int(f))
    return repr(f)


def print_expression(seq: E.ExponentSequence) -> str:
    """Canonical DSL text; round-trips through :func:`parse_expression`."""
    if isinstance(seq, E.Const):
        return _fmt(seq.value)
    if isinstance(seq, E.RationalDrift):
        sign = "+" if seq.coeff >= 0 else "-"
        decay = "" if seq.decay == 1.0 else f"^{_fmt(seq.decay)}"
        return f"{_fmt(seq.limit)} {sign} {_fmt(abs(seq.coeff))}/n{decay}"
    if isinstance(seq, E.Linear):
        head = "n" if seq.slope == 1.0 else f"{_fmt(seq.slope)}*n"
        if seq.intercept == 0.0:
            return head
        sign = "+" if seq.intercept > 0 else "-"
        return f"{head} {sign} {_fmt(abs(seq.intercept))}"
    if isinstance(seq, E.BlockRepeat):
        return "blocks"
    if isinstance(seq, E.Sum):
        return f"{print_expression(seq.left)} + {print_expression(seq.right)}"
    if isinstance(seq, E.Merge):
        if isinstance(seq.index_set, Evens):
            name = "even"
        elif isinstance(seq.index_set, Odds):
            name = "odd"
        else:  # not DSL-expressible; printable for diagnostics only
            name = f"<{seq.index_set!r}>"
        return f"merge({name}: {print_expression(seq.on_set)}, {print_expression(seq.off_set)})"
    if isinstance(seq, E.Prefix):
        pairs = ", ".join(f"{i}={_fmt(v)}" for i, v in seq.overrides)
        return f"prefix({pairs}; {print_expression(seq.tail)})"
    if isinstance(seq, E.AbsDiff):
        return f"absdiff({print_expression(seq.left)}, {print_expression(seq.right)})"
    if isinstance(seq, E.RnOf):
        return f"rn({print_expression(seq.p)}, {print_expression(seq.q)})"
    if isinstance(seq, E.NakanoExponent):
        return f"nakexp({print_expression(seq.p)}, {print_expression(seq.q)})"
    if isinstance(seq, E.Recip):
        return f"recip({print_expression(seq.inner)})"
    raise TypeError(f"not a printable descriptor: {seq!r}")
