"""Parsers for polynomial expressions and group specifier strings.

Polynomial grammar (whitespace insignificant):

    poly  := ['-'] term (('+' | '-') term)*
    term  := [coeff '*'] word | coeff
    coeff := decimal | '(' decimal (('+'|'-') decimal 'i') ')' | 'i'
    word  := gen ('^' int)? (gen ('^' int)?)*
    gen   := 'x' | 'y' | 'x1' .. 'x9'

Decimal literals parse to exact rationals and 'i' to the exact imaginary
unit, so polynomials entered on the command line keep the exact arithmetic
paths alive.  The leading '-' is a convenience superset of the grammar so
that printed expressions always re-parse.

Group specifiers: Z^l, products of Z and Z/n joined with 'x' (e.g.
Z/3xZ/2, ZxZ/4), Dm / Dinf, Dicm / Dicinf, Fl, and Ca*Cb free products.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import groups as gr
from . import ring as rg
from .coeffs import GaussianRational
from .errors import ParseError

GENERATOR_RE = re.compile(r"x[1-9]|x|y|i")
NUMBER_RE = re.compile(r"\d+(\.\d+)?")


@dataclass(frozen=True)
class Term:
    coeff: object  # int | Fraction | GaussianRational (or float-kind if built by hand)
    word: tuple  # ((generator_name, exponent), ...)


@dataclass(frozen=True)
class PolyExpr:
    terms: tuple[Term, ...]


class _Scanner:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def match_number(self):
        self.skip_ws()
        m = NUMBER_RE.match(self.src, self.pos)
        if not m:
            return None
        self.pos = m.end()
        text = m.group(0)
        if "." in text:
            return Fraction(text)
        return int(text)

    def match_generator(self):
        self.skip_ws()
        m = GENERATOR_RE.match(self.src, self.pos)
        if not m or m.group(0) == "i":
            return None
        self.pos = m.end()
        return m.group(0)

    def match_int(self):
        self.skip_ws()
        sign = 1
        start = self.pos
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        self.skip_ws()
        m = re.compile(r"\d+").match(self.src, self.pos)
        if not m:
            self.pos = start
            return None
        self.pos = m.end()
        return sign * int(m.group(0))

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.src)


def _parse_coeff(sc: _Scanner):
    """Return a coefficient, or None if none is present here."""
    ch = sc.peek()
    if ch == "i":
        sc.pos += 1
        return GaussianRational(0, 1)
    if ch == "(":
        sc.pos += 1
        re_part = sc.match_number()
        if re_part is None:
            raise ParseError("expected a decimal inside parentheses", sc.pos)
        sign_ch = sc.peek()
        if sign_ch not in "+-":
            raise ParseError("expected '+' or '-' in complex literal", sc.pos)
        sc.pos += 1
        im_part = sc.match_number()
        if im_part is None:
            raise ParseError("expected a decimal imaginary part", sc.pos)
        if sc.peek() != "i":
            raise ParseError("expected 'i' to close the imaginary part", sc.pos)
        sc.pos += 1
        sc.expect(")")
        if sign_ch == "-":
            im_part = -im_part
        return GaussianRational(re_part, im_part)
    num = sc.match_number()
    return num


def _parse_word(sc: _Scanner):
    factors = []
    while True:
        gen = sc.match_generator()
        if gen is None:
            break
        exp = 1
        if sc.peek() == "^":
            sc.pos += 1
            exp = sc.match_int()
            if exp is None:
                raise ParseError("expected an integer exponent after '^'", sc.pos)
        if exp != 0:
            factors.append((gen, exp))
    return tuple(factors)


def _parse_term(sc: _Scanner) -> Term:
    pos = sc.pos
    coeff = _parse_coeff(sc)
    if coeff is not None:
        if sc.peek() == "*":
            sc.pos += 1
            word = _parse_word(sc)
            if not word:
                raise ParseError("expected a word after '*'", sc.pos)
            return Term(coeff, word)
        return Term(coeff, ())
    word = _parse_word(sc)
    if not word:
        raise ParseError("expected a term", pos)
    return Term(1, word)


def parse_poly(src: str) -> PolyExpr:
    """Parse a polynomial expression; raises ParseError with a position."""
    sc = _Scanner(src)
    terms = []
    negate = False
    if sc.peek() == "-":
        sc.pos += 1
        negate = True
    if sc.done():
        raise ParseError("empty polynomial", sc.pos)
    term = _parse_term(sc)
    terms.append(Term(-term.coeff, term.word) if negate else term)
    while not sc.done():
        op = sc.peek()
        if op not in "+-":
            raise ParseError(f"expected '+' or '-', found {op!r}", sc.pos)
        sc.pos += 1
        term = _parse_term(sc)
        terms.append(Term(-term.coeff, term.word) if op == "-" else term)
    return PolyExpr(tuple(terms))


# ---------------------------------------------------------------------------
# printing (unparse . parse is identity up to canonical term ordering)


def _format_coeff(c) -> str:
    if isinstance(c, GaussianRational):
        if c.im == 0:
            return _format_rational(c.re)
        if c.re == 0 and c.im == 1:
            return "i"
        return f"({_format_rational(c.re)}{'+' if c.im >= 0 else '-'}{_format_rational(abs(c.im))}i)"
    if isinstance(c, complex):
        return f"({_format_rational(c.real)}{'+' if c.imag >= 0 else '-'}{_format_rational(abs(c.imag))}i)"
    return _format_rational(c)


def _format_rational(x) -> str:
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        # exact decimal when the denominator is 2^a 5^b; grammar has no '/'
        num, den = x.numerator, x.denominator
        shift = 0
        while den % 2 == 0:
            den //= 2
            shift += 1
        fives = 0
        while den % 5 == 0:
            den //= 5
            fives += 1
        if den == 1:
            scale = max(shift, fives)
            digits = num * 10**scale // x.denominator
            s = f"{abs(digits):0{scale + 1}d}"
            sign = "-" if digits < 0 else ""
            return f"{sign}{s[:-scale] or '0'}.{s[-scale:]}"
        return repr(float(x))  # lossy fallback outside the decimal grammar
    return repr(float(x))


def print_poly(expr: PolyExpr) -> str:
    parts = []
    for idx, t in enumerate(expr.terms):
        negative, c = _extract_sign(t.coeff)
        body = _term_body(c, t.word)
        if idx == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"{'-' if negative else '+'} {body}")
    return " ".join(parts)


def _extract_sign(c):
    """Split off a leading minus so the remaining coefficient fits the
    unsigned grammar literals."""
    if isinstance(c, GaussianRational):
        if c.re < 0 or (c.re == 0 and c.im < 0):
            return True, -c
        return False, c
    if isinstance(c, complex):
        if c.real < 0 or (c.real == 0 and c.imag < 0):
            return True, -c
        return False, c
    return (True, -c) if c < 0 else (False, c)


def _term_body(c, word) -> str:
    word_str = "".join(
        name + (f"^{exp}" if exp != 1 else "") for name, exp in word
    )
    if not word:
        return _format_coeff(c)
    if c == 1:
        return word_str
    return f"{_format_coeff(c)}*{word_str}"


# ---------------------------------------------------------------------------
# binding to a group


def to_ring_element(expr: PolyExpr, group: gr.GroupSpec) -> rg.RingElement:
    """Evaluate an expression tree in a group's ring; generator names are
    positional (x -> generator 0, y -> generator 1, xk -> generator k-1)."""
    names = gr.generator_names(group)
    word_terms = []
    for t in expr.terms:
        word = []
        for name, exp in t.word:
            if name not in names:
                raise ParseError(
                    f"unknown generator {name!r} for group with generators {names}"
                )
            word.append((names.index(name), exp))
        word_terms.append((t.coeff, tuple(word)))
    return rg.from_word_terms(group, word_terms)


def parse_poly_over(src: str, group: gr.GroupSpec) -> rg.RingElement:
    return to_ring_element(parse_poly(src), group)


# ---------------------------------------------------------------------------
# group specifiers

_DIGITS_RE = re.compile(r"^\d+$")


def parse_group(src: str) -> gr.GroupSpec:
    """Parse a group specifier string; raises ParseError on unknown forms."""
    s = src.strip()
    if not s:
        raise ParseError("empty group specifier")
    if s.startswith("Dic"):
        rest = s[3:]
        if rest == "inf":
            return gr.Dicyclic(0)
        if _DIGITS_RE.match(rest) and int(rest) >= 1:
            return gr.Dicyclic(int(rest))
        raise ParseError(f"bad dicyclic specifier {src!r}")
    if s.startswith("D"):
        rest = s[1:]
        if rest == "inf":
            return gr.Dihedral(0)
        if _DIGITS_RE.match(rest) and int(rest) >= 1:
            return gr.Dihedral(int(rest))
        raise ParseError(f"bad dihedral specifier {src!r}")
    if s.startswith("F"):
        rest = s[1:]
        if _DIGITS_RE.match(rest) and int(rest) >= 1:
            return gr.Free(int(rest))
        raise ParseError(f"bad free-group specifier {src!r}")
    if "*" in s:
        orders = []
        for part in s.split("*"):
            part = part.strip()
            if not part.startswith("C") or not _DIGITS_RE.match(part[1:]):
                raise ParseError(f"bad free-product factor {part!r} in {src!r}")
            orders.append(int(part[1:]))
        try:
            return gr.FreeProductCyclic(tuple(orders))
        except ValueError as e:
            raise ParseError(str(e)) from None
    moduli = []
    for part in s.split("x"):
        part = part.strip()
        if part == "Z":
            moduli.append(0)
        elif part.startswith("Z^") and _DIGITS_RE.match(part[2:]):
            moduli.extend([0] * int(part[2:]))
        elif part.startswith("Z/") and _DIGITS_RE.match(part[2:]) and int(part[2:]) >= 1:
            moduli.append(int(part[2:]))
        else:
            raise ParseError(f"bad abelian factor {part!r} in {src!r}")
    try:
        return gr.AbelianProduct(tuple(moduli))
    except ValueError as e:
        raise ParseError(str(e)) from None
