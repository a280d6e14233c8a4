"""Real root counting and certified isolation via Sturm sequences.

Counting convention: ``count(a, b)`` is the number of distinct real roots
in the half-open interval ``(a, b]``.  Sign sequences skip zeros, which
makes the sign-variation difference count ``(a, b]`` even when an endpoint
is a root; the public :func:`sturm_count` still refuses root endpoints.

Interval splitting uses the simplest rational in the middle half of the
current interval rather than the midpoint.  Shrinkage stays geometric
(factor <= 3/4), endpoint bit sizes stay small, and rational roots with
small denominators are hit exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

from .errors import EndpointIsRoot, PreconditionError, ZeroPolynomial
from .poly import (
    Poly,
    as_fraction,
    derivative,
    divmod_poly,
    integer_primitive,
    square_free_decompose,
    square_free_part,
)


class SignClass(enum.Enum):
    ALL_NEGATIVE = "AllNegative"
    ALL_POSITIVE = "AllPositive"
    MIXED = "Mixed"
    HAS_ZERO_ROOT = "HasZeroRoot"
    NO_REAL_ROOTS = "NoRealRoots"


# ---------------------------------------------------------------- signs


def int_sign_at(coeffs: list[int], x: Fraction) -> int:
    """Sign of the integer polynomial ``coeffs`` at ``x``, in integer arithmetic."""
    if not coeffs:
        return 0
    n, d = x.numerator, x.denominator
    acc = coeffs[-1]
    dpow = d
    for c in reversed(coeffs[:-1]):
        acc = acc * n + c * dpow
        dpow *= d
    return (acc > 0) - (acc < 0)


def _sign_at_infinity(coeffs: list[int], positive: bool) -> int:
    lc = coeffs[-1]
    s = (lc > 0) - (lc < 0)
    if not positive and (len(coeffs) - 1) % 2 == 1:
        s = -s
    return s


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a square-free polynomial, as primitive integer lists.

    ``chain[0]`` is the square-free part of the input (scaled to a primitive
    integer polynomial), ``chain[1]`` its derivative, then negated remainders
    up to positive factors, ending at a nonzero constant.
    """

    chain: tuple[tuple[int, ...], ...]

    @property
    def base(self) -> list[int]:
        return list(self.chain[0])

    @property
    def degree(self) -> int:
        return len(self.chain[0]) - 1

    def variations(self, x: Fraction) -> int:
        return _variations(int_sign_at(list(c), x) for c in self.chain)

    def variations_at_infinity(self, positive: bool) -> int:
        return _variations(_sign_at_infinity(list(c), positive) for c in self.chain)

    def count(self, a: Fraction, b: Fraction) -> int:
        """Distinct roots in ``(a, b]``; endpoints may be roots."""
        return self.variations(a) - self.variations(b)

    def sign(self, x: Fraction) -> int:
        return int_sign_at(list(self.chain[0]), x)

    def polys(self) -> list[Poly]:
        return [Poly(c) for c in self.chain]


@lru_cache(maxsize=4096)
def sturm_chain(p: Poly) -> SturmChain:
    if p.is_zero:
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    sq = Poly(integer_primitive(square_free_part(p)))
    if sq.degree == 0:
        return SturmChain(((1,),))
    seq = [sq, Poly(integer_primitive(derivative(sq)))]
    while seq[-1].degree > 0:
        _, r = divmod_poly(seq[-2], seq[-1])
        if r.is_zero:  # cannot happen for square-free input
            break
        seq.append(Poly(integer_primitive(-r)))
    return SturmChain(tuple(tuple(int(c) for c in s.coeffs) for s in seq))


def cauchy_bound(p: Poly) -> Fraction:
    """``1 + max|c_i / c_n|``: every root has modulus strictly below it."""
    if p.is_zero:
        raise ZeroPolynomial("root bound of the zero polynomial")
    lc = abs(p.leading_coefficient)
    if p.degree == 0:
        return Fraction(1)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lc


# ---------------------------------------------------------------- decisions


def sturm_count(p: Poly, a, b) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]``."""
    a, b = as_fraction(a), as_fraction(b)
    if p.is_zero:
        raise ZeroPolynomial("sturm_count of the zero polynomial")
    if not a < b:
        raise PreconditionError(f"need a < b, got a={a}, b={b}")
    if p(a) == 0 or p(b) == 0:
        raise EndpointIsRoot(f"an endpoint of ({a}, {b}] is a root")
    return sturm_chain(p).count(a, b)


def distinct_real_root_count(p: Poly) -> int:
    bound = cauchy_bound(p)
    return sturm_chain(p).count(-bound, bound)


def is_hyperbolic(p: Poly) -> bool:
    """True iff all complex roots of ``p`` are real; constants are hyperbolic."""
    if p.is_zero:
        raise ZeroPolynomial("hyperbolicity of the zero polynomial")
    if p.degree == 0:
        return True
    ch = sturm_chain(p)
    return distinct_real_root_count(p) == ch.degree


def root_sign_class(p: Poly) -> SignClass:
    if p.is_zero:
        raise ZeroPolynomial("sign class of the zero polynomial")
    if p.coeff(0) == 0:
        return SignClass.HAS_ZERO_ROOT
    bound = cauchy_bound(p)
    ch = sturm_chain(p)
    neg = ch.count(-bound, Fraction(0))
    pos = ch.count(Fraction(0), bound)
    if neg and pos:
        return SignClass.MIXED
    if neg:
        return SignClass.ALL_NEGATIVE
    if pos:
        return SignClass.ALL_POSITIVE
    return SignClass.NO_REAL_ROOTS


# ---------------------------------------------------------------- isolation


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with least denominator in the closed interval ``[lo, hi]``."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    # continued-fraction descent, lo > 0
    fl = floor(lo)
    if Fraction(fl) == lo:
        return lo
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def split_point(lo: Fraction, hi: Fraction) -> Fraction:
    w = hi - lo
    return simplest_between(lo + w / 4, hi - w / 4)


@dataclass(frozen=True)
class IsolatingInterval:
    """``(lo, hi]`` holding exactly one distinct real root, or the exact point ``lo == hi``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = as_fraction(x)
        if self.exact:
            return x == self.lo
        return self.lo < x <= self.hi


@dataclass(frozen=True)
class RootProfile:
    intervals: tuple[IsolatingInterval, ...]
    total_with_multiplicity: int
    degree: int

    @property
    def hyperbolic(self) -> bool:
        return self.total_with_multiplicity == self.degree

    @property
    def distinct(self) -> int:
        return len(self.intervals)


def refine(ch: SturmChain, iv: IsolatingInterval, width: Fraction) -> IsolatingInterval:
    """Shrink an isolating interval of a simple root of ``ch.base`` to ``width``."""
    if iv.exact or iv.width <= width:
        return iv
    lo, hi = iv.lo, iv.hi
    base = ch.base
    s_lo = int_sign_at(base, lo)
    while hi - lo > width:
        m = split_point(lo, hi)
        s = int_sign_at(base, m)
        if s == 0:
            return IsolatingInterval(m, m, iv.multiplicity)
        if s == s_lo:
            lo = m
        else:
            hi = m
    return IsolatingInterval(lo, hi, iv.multiplicity)


def refine_step(ch: SturmChain, iv: IsolatingInterval) -> IsolatingInterval:
    """One splitting step (width shrinks by at least a quarter)."""
    if iv.exact:
        return iv
    return refine(ch, iv, iv.width * Fraction(3, 4))


def try_exact(ch: SturmChain, iv: IsolatingInterval) -> IsolatingInterval:
    """Decide whether the root in ``iv`` is rational; if so return it as a point.

    A rational root ``n/d`` of the primitive integer base satisfies ``d | lc``,
    so ``lc * root`` is an integer.  Refine until ``(lc*lo, lc*hi]`` holds at
    most one integer and test that single candidate.
    """
    if iv.exact:
        return iv
    lc = abs(ch.chain[0][-1])
    iv = refine(ch, iv, Fraction(1, 2 * lc))
    if iv.exact:
        return iv
    cand = Fraction(floor(iv.hi * lc), lc)
    if iv.lo < cand <= iv.hi and ch.sign(cand) == 0:
        return IsolatingInterval(cand, cand, iv.multiplicity)
    return iv


def _separate_point(ch: SturmChain, m: Fraction, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Non-root points ``l < m < r`` inside ``(a, b)`` with ``m`` the only root in ``(l, r]``."""
    deg = max(ch.degree, 1)
    delta = Fraction(1, 2 * m.denominator * (deg + 1))
    delta = min(delta, (m - a) / 2, (b - m) / 2)
    while True:
        l, r = m - delta, m + delta
        if ch.sign(l) != 0 and ch.sign(r) != 0 and ch.count(l, r) == 1:
            return l, r
        delta /= 2


def isolate_in(ch: SturmChain, a: Fraction, b: Fraction, width: Fraction) -> list[IsolatingInterval]:
    """Isolate all roots of ``ch.base`` in ``(a, b]``; ``a`` and ``b`` must not be roots."""
    out: list[IsolatingInterval] = []
    stack = [(a, b, ch.count(a, b))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            iv = refine(ch, IsolatingInterval(lo, hi), width)
            out.append(_snap(ch, iv))
            continue
        m = split_point(lo, hi)
        if ch.sign(m) == 0:
            out.append(IsolatingInterval(m, m))
            l, r = _separate_point(ch, m, lo, hi)
            nl = ch.count(lo, l)
            stack.append((lo, l, nl))
            stack.append((r, hi, n - nl - 1))
        else:
            nl = ch.count(lo, m)
            stack.append((lo, m, nl))
            stack.append((m, hi, n - nl))
    out.sort(key=lambda iv: iv.lo)
    return out


def _snap(ch: SturmChain, iv: IsolatingInterval) -> IsolatingInterval:
    if iv.exact:
        return iv
    c = simplest_between(iv.lo, iv.hi)
    if c != iv.lo and ch.sign(c) == 0:
        return IsolatingInterval(c, c, iv.multiplicity)
    return iv


def _factor_has_root(f: list[int], iv: IsolatingInterval) -> bool:
    if iv.exact:
        return int_sign_at(f, iv.lo) == 0
    return int_sign_at(f, iv.lo) != int_sign_at(f, iv.hi)


def assign_multiplicities(
    factors: list[tuple[Poly, int]], intervals: list[IsolatingInterval]
) -> list[int]:
    """Multiplicity of the single root in each interval w.r.t. a square-free decomposition.

    Intervals must isolate roots of a square-free polynomial divisible by
    every factor's roots; a root absent from every factor gets 0.
    """
    ints = [(integer_primitive(f), m) for f, m in factors]
    out = []
    for iv in intervals:
        mult = 0
        for f, m in ints:
            if _factor_has_root(f, iv):
                mult = m
                break
        out.append(mult)
    return out


def isolate_roots(p: Poly, width) -> RootProfile:
    """Certified isolating intervals of width <= ``width`` for all distinct real roots."""
    width = as_fraction(width)
    if p.is_zero:
        raise ZeroPolynomial("isolate_roots of the zero polynomial")
    if p.degree == 0:
        raise PreconditionError("isolate_roots needs a nonconstant polynomial")
    if width <= 0:
        raise PreconditionError("width must be positive")
    ch = sturm_chain(p)
    bound = cauchy_bound(p)
    raw = isolate_in(ch, -bound, bound, width)
    mults = assign_multiplicities(square_free_decompose(p), raw)
    intervals = tuple(IsolatingInterval(iv.lo, iv.hi, m) for iv, m in zip(raw, mults))
    return RootProfile(intervals, sum(mults), p.degree)
