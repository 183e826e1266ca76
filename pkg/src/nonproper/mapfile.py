"""Reading and writing map files.

A map file holds two assignment lines ``f1 = <poly>`` and ``f2 = <poly>`` in
the variables ``u`` and ``v``.  Blank lines and ``#`` comments are ignored.

Grammar (whitespace insensitive)::

    poly     := sign? term (('+' | '-') term)*
    term     := coeff ('*'? monomial)? | monomial
    coeff    := number ('/' integer)? 'i'? | 'i' | '(' poly ')'
    monomial := var ('^' integer)? ('*'? var ('^' integer)?)*
    var      := 'u' | 'v'

A parenthesised coefficient must be constant, e.g. ``(1/2-3i)*u``.
"""
from __future__ import annotations

from fractions import Fraction

from .polyring import GaussRat, Poly, PolyMap

__all__ = ["ParseError", "parse_coefficient", "parse_poly", "parse_map", "format_map"]


class ParseError(ValueError):
    """Syntax error with a 1-based column (and line, for map files)."""

    def __init__(self, message: str, column: int, line: int | None = None):
        self.message, self.column, self.line = message, column, line
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        super().__init__(f"{where}: {message}")


class _Parser:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset  # columns preceding ``text`` on its line

    # helpers ------------------------------------------------------------
    def error(self, message, pos=None):
        pos = self.pos if pos is None else pos
        return ParseError(message, self.offset + pos + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    # grammar ------------------------------------------------------------
    def poly(self) -> Poly:
        total = Poly()
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        op_pos = None
        while True:
            if not self.peek() or self.peek() in "+-)":
                if op_pos is None:
                    raise self.error("expected a term")
                raise self.error(f"expected a term after {self.text[op_pos]!r}", op_pos)
            t = self.term()
            total = total + t if sign > 0 else total - t
            ch = self.peek()
            if ch not in ("+", "-"):
                return total
            op_pos = self.pos
            sign = -1 if ch == "-" else 1
            self.pos += 1

    def term(self) -> Poly:
        ch = self.peek()
        coeff = None
        if ch.isdigit() or ch == "." or ch == "(" or (ch == "i" and not self._is_var(ch)):
            coeff = self.coeff()
            if self.take("*"):
                if self.peek() not in ("u", "v"):
                    raise self.error("expected 'u' or 'v' after '*'")
        mono = self.monomial()
        if coeff is None and mono is None:
            raise self.error(f"unexpected {self.peek()!r}" if self.peek() else "unexpected end of input")
        c = GaussRat(1) if coeff is None else coeff
        return Poly.monomial(mono or (0, 0), c)

    @staticmethod
    def _is_var(ch):
        return ch in ("u", "v")

    def number(self) -> Fraction:
        start = self.pos
        whole = self.digits()
        frac = ""
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            frac = self.digits()
        if not whole and not frac:
            raise self.error("expected a number", start)
        value = Fraction(f"{whole or '0'}.{frac or '0'}")
        if self.take("/"):
            self.skip()
            den_pos = self.pos
            den = self.digits()
            if not den:
                raise self.error("expected an integer denominator")
            if int(den) == 0:
                raise self.error("division by zero", den_pos)
            value /= int(den)
        return value

    def coeff(self) -> GaussRat:
        ch = self.peek()
        if ch == "(":
            open_pos = self.pos
            self.pos += 1
            inner = self.poly()
            if not self.take(")"):
                raise self.error("expected ')'")
            if not inner.is_constant():
                raise self.error("parenthesised coefficient must be constant", open_pos)
            return inner.constant_term()
        if ch == "i":
            self.pos += 1
            return GaussRat(0, 1)
        value = self.number()
        if self.peek() == "i":
            self.pos += 1
            return GaussRat(0, value)
        return GaussRat(value)

    def monomial(self):
        exps = [0, 0]
        seen = False
        while True:
            save = self.pos
            ch = self.peek()
            if ch not in ("u", "v"):
                if seen and ch == "*":
                    raise self.error("expected 'u' or 'v' after '*'")
                return tuple(exps) if seen else None
            self.pos += 1
            k = 1
            if self.take("^"):
                self.skip()
                d = self.digits()
                if not d:
                    raise self.error("expected a non-negative integer exponent")
                k = int(d)
            exps[0 if ch == "u" else 1] += k
            seen = True
            save = self.pos
            if self.take("*"):
                if self.peek() not in ("u", "v"):
                    self.pos = save
                    raise self.error("expected 'u' or 'v' after '*'")

    def parse_all(self) -> Poly:
        p = self.poly()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return p


def parse_poly(text: str, offset: int = 0) -> Poly:
    return _Parser(text, offset).parse_all()


def parse_coefficient(text: str) -> GaussRat:
    """A constant such as ``"3/2"``, ``"-1/3i"`` or ``"1/2+3i"``."""
    p = parse_poly(text)
    if not p.is_constant():
        raise ParseError("expected a constant", 1)
    return p.constant_term()


def parse_map(text: str) -> PolyMap:
    comps = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        name, eq, rhs = line.partition("=")
        key = name.strip()
        if not eq or key not in ("f1", "f2"):
            raise ParseError("expected 'f1 = ...' or 'f2 = ...'", len(line) - len(line.lstrip()) + 1, lineno)
        if key in comps:
            raise ParseError(f"{key} assigned twice", 1, lineno)
        try:
            p = parse_poly(rhs, offset=len(name) + 1)
        except ParseError as exc:
            raise ParseError(exc.message, exc.column, lineno) from None
        if p.is_zero():
            raise ParseError(f"{key} is the zero polynomial", len(name) + 2, lineno)
        comps[key] = p
    for key in ("f1", "f2"):
        if key not in comps:
            raise ParseError(f"missing {key}", 1, None)
    return PolyMap(comps["f1"], comps["f2"])


def format_map(f: PolyMap) -> str:
    return f"f1 = {f.f1}\nf2 = {f.f2}\n"
