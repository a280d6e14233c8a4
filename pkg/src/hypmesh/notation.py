"""Text formats for polynomials, sequences and rationals.

Polynomials::

    coeffs:c0,c1,...,ck        ascending coefficients; formal degree k
    roots:[lc;]r1,...,rk       lc * prod(x - r_i), lc defaults to 1

Sequences::

    seq:a0,a1,...,aK

Rational literals are ``n`` or ``n/d`` with an optional sign.  Whitespace
is ignored everywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Poly

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def _strip(text: str) -> tuple[str, list[int]]:
    """Drop whitespace, remembering original positions for error messages."""
    chars, pos = [], []
    for i, ch in enumerate(text):
        if not ch.isspace():
            chars.append(ch)
            pos.append(i)
    pos.append(len(text))
    return "".join(chars), pos


def _parse_rational_at(s: str, start: int, end: int, pos: list[int]) -> Fraction:
    token = s[start:end]
    m = _RATIONAL.fullmatch(token)
    if not m:
        raise ParseError(f"invalid rational literal {token!r}", pos[start])
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ParseError("zero denominator", pos[start + token.index("/") + 1])
    return Fraction(token)


def _parse_list(s: str, start: int, pos: list[int], allow_empty: bool = False) -> list[Fraction]:
    body = s[start:]
    if not body:
        if allow_empty:
            return []
        raise ParseError("expected at least one value", pos[start])
    out = []
    i = start
    for part in body.split(","):
        out.append(_parse_rational_at(s, i, i + len(part), pos))
        i += len(part) + 1
    return out


def parse_rational(text: str) -> Fraction:
    s, pos = _strip(text)
    if not s:
        raise ParseError("empty rational literal", 0)
    return _parse_rational_at(s, 0, len(s), pos)


def parse_poly(text: str) -> Poly:
    s, pos = _strip(text)
    if s.startswith("coeffs:"):
        cs = _parse_list(s, len("coeffs:"), pos)
        return Poly(cs, len(cs) - 1 if any(cs) else None)
    if s.startswith("roots:"):
        start = len("roots:")
        lc = Fraction(1)
        semi = s.find(";", start)
        if semi != -1:
            lc = _parse_rational_at(s, start, semi, pos)
            if lc == 0:
                raise ParseError("leading coefficient must be nonzero", pos[start])
            start = semi + 1
        roots = _parse_list(s, start, pos, allow_empty=semi != -1)
        return Poly.from_roots(roots, lc)
    raise ParseError("expected 'coeffs:' or 'roots:' prefix", pos[0] if s else 0)


def parse_seq(text: str) -> list[Fraction]:
    s, pos = _strip(text)
    if not s.startswith("seq:"):
        raise ParseError("expected 'seq:' prefix", pos[0] if s else 0)
    return _parse_list(s, len("seq:"), pos)


def format_rational(x: Fraction) -> str:
    return str(x)


def format_poly(p: Poly) -> str:
    """``coeffs:`` form padded to the formal degree, so ``parse_poly`` round-trips it."""
    return "coeffs:" + ",".join(str(c) for c in p.full_coeffs())


def format_seq(values) -> str:
    return "seq:" + ",".join(str(Fraction(v)) for v in values)
