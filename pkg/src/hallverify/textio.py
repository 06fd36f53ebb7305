"""Plain-text syntax for polynomials and ideal fixture files.

Grammar (whitespace-insensitive)::

    expr   :=  ['-'] term (('+' | '-') term)*
    term   :=  atom ('*'? atom)*
    atom   :=  number | var power? | '(' expr ')' power?
    power  :=  '^' ['-'] digits
    number :=  digits ('/' digits)?

Variable names are C-style identifiers and must belong to the declared
ring.  ``format_poly`` (see :mod:`.rings`) emits a canonical subset of
this grammar, and ``parse_poly(format_poly(p)) == p`` holds exactly.

An ideal fixture file holds a ring declaration followed by one generator
per non-empty line::

    ring: X11 X12 X22 Y11 Y12 Y22
    X12*(Y11-Y22) - Y12*(X11-X22)

Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .rings import LaurentPoly, RingContext

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    """Malformed polynomial or fixture text."""


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
        tokens.append(m.group("num") or m.group("var") or m.group("op"))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], ring: RingContext) -> None:
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def parse_expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() == "-":
            self.next()
            sign = -1
        elif self.peek() == "+":
            self.next()
        result = self.parse_term() * sign
        while self.peek() in ("+", "-"):
            op = self.next()
            term = self.parse_term()
            result = result + term if op == "+" else result - term
        return result

    def parse_term(self) -> LaurentPoly:
        result = self.parse_atom()
        while True:
            tok = self.peek()
            if tok == "*":
                self.next()
                result = result * self.parse_atom()
            elif tok is not None and tok not in ("+", "-", ")", "^"):
                result = result * self.parse_atom()
            else:
                return result

    def parse_power(self) -> int:
        self.next()  # consume '^'
        neg = False
        if self.peek() == "-":
            self.next()
            neg = True
        tok = self.next()
        if not tok.isdigit():
            raise ParseError(f"expected integer exponent, found {tok!r}")
        e = int(tok)
        return -e if neg else e

    def parse_atom(self) -> LaurentPoly:
        tok = self.next()
        if tok == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ParseError("unbalanced parenthesis")
            if self.peek() == "^":
                e = self.parse_power()
                if e < 0:
                    raise ParseError("negative power of a non-monomial group")
                return inner ** e
            return inner
        if re.fullmatch(r"\d+(/\d+)?", tok):
            return LaurentPoly.const(self.ring, Fraction(tok))
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            power = self.parse_power() if self.peek() == "^" else 1
            return LaurentPoly.variable(self.ring, tok, power)
        raise ParseError(f"unexpected token {tok!r}")


def parse_poly(text: str, ring: RingContext) -> LaurentPoly:
    """Parse polynomial text against a declared ring."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    parser = _Parser(tokens, ring)
    result = parser.parse_expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input starting at {parser.peek()!r}")
    return result


# ---------------------------------------------------------------------------
# Ideal fixture files
# ---------------------------------------------------------------------------

def parse_ideal_text(text: str) -> tuple[RingContext, list[LaurentPoly]]:
    """Parse a ring declaration plus one generator per line."""
    ring: RingContext | None = None
    gens: list[LaurentPoly] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ring is None:
            if not line.startswith("ring:"):
                raise ParseError(f"line {lineno}: expected 'ring:' declaration first")
            names = line[len("ring:"):].split()
            if not names:
                raise ParseError(f"line {lineno}: empty ring declaration")
            ring = RingContext(names)
            continue
        try:
            gens.append(parse_poly(line, ring))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if ring is None:
        raise ParseError("missing 'ring:' declaration")
    return ring, gens


def load_ideal_file(path: Union[str, Path]) -> tuple[RingContext, list[LaurentPoly]]:
    return parse_ideal_text(Path(path).read_text(encoding="utf-8"))


def format_ideal_text(ring: RingContext, gens: list[LaurentPoly]) -> str:
    lines = ["ring: " + " ".join(ring.variables)]
    lines.extend(str(g) for g in gens)
    return "\n".join(lines) + "\n"
