"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` in ascending degree order.
A :class:`Poly` also carries a *formal degree*, an upper bound on the
effective degree that fixes the binomial normalization used by the
Schur-Szego composition.  Arithmetic never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import ZeroPolynomial

Scalar = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and rational strings to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Immutable dense polynomial with exact rational coefficients.

    Equality and hashing compare coefficient vectors only; the formal
    degree is bookkeeping for binomially weighted operations.
    """

    __slots__ = ("_coeffs", "_formal_degree", "_hash")

    def __init__(self, coeffs: Iterable = (), formal_degree: int | None = None):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        eff = len(cs) - 1
        if not cs:
            fd = 0
        elif formal_degree is None:
            fd = eff
        else:
            if formal_degree < eff:
                raise ValueError(f"formal degree {formal_degree} below effective degree {eff}")
            fd = int(formal_degree)
        self._coeffs = tuple(cs)
        self._formal_degree = fd
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable, lc: Scalar = 1) -> Poly:
        p = cls.constant(lc)
        for r in roots:
            p = multiply(p, cls((-as_fraction(r), 1)))
        return p

    @classmethod
    def from_int_list(cls, coeffs: Sequence[int]) -> Poly:
        return cls(coeffs)

    # accessors
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def formal_degree(self) -> int:
        return self._formal_degree

    @property
    def degree(self) -> int:
        """Effective degree; raises ZeroPolynomial on 0."""
        if not self._coeffs:
            raise ZeroPolynomial("degree of the zero polynomial is undefined")
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, j: int) -> Fraction:
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def full_coeffs(self) -> list[Fraction]:
        """Coefficients padded with zeros up to the formal degree."""
        return list(self._coeffs) + [Fraction(0)] * (self._formal_degree + 1 - len(self._coeffs))

    def with_formal_degree(self, k: int) -> Poly:
        return Poly(self._coeffs, k)

    # dunder plumbing
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __repr__(self):
        body = ", ".join(str(c) for c in self._coeffs)
        return f"Poly([{body}], formal_degree={self._formal_degree})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for j in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if j == 0:
                mag = str(a)
            else:
                mag = "" if a == 1 else (f"({a})" if a.denominator != 1 else str(a))
                mag += "x" if j == 1 else f"x^{j}"
            terms.append((sign, mag))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mag in terms[1:]:
            out += f" {sign} {mag}"
        return out

    def __call__(self, x: Scalar) -> Fraction:
        return evaluate(self, x)

    def __add__(self, other):
        return add_scaled(self, _lift(other), 1, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return add_scaled(self, _lift(other), 1, -1)

    def __rsub__(self, other):
        return add_scaled(_lift(other), self, 1, -1)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return multiply(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly.constant(1)
        for _ in range(n):
            out = multiply(out, self)
        return out


def _lift(value) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def scale(p: Poly, c: Scalar) -> Poly:
    c = as_fraction(c)
    return Poly((c * a for a in p.coeffs), p.formal_degree if c else None)


def add_scaled(p: Poly, q: Poly, c: Scalar, d: Scalar) -> Poly:
    """Return ``c*p + d*q`` with formal degree ``max`` of the inputs."""
    c, d = as_fraction(c), as_fraction(d)
    n = max(len(p.coeffs), len(q.coeffs))
    out = [c * p.coeff(j) + d * q.coeff(j) for j in range(n)]
    return Poly(out, max(p.formal_degree, q.formal_degree, _eff(out)))


def _eff(cs: Sequence[Fraction]) -> int:
    n = len(cs) - 1
    while n > 0 and cs[n] == 0:
        n -= 1
    return max(n, 0)


def multiply(p: Poly, q: Poly) -> Poly:
    if p.is_zero or q.is_zero:
        return Poly.zero()
    a, b = p.coeffs, q.coeffs
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return Poly(out, p.formal_degree + q.formal_degree)


def derivative(p: Poly) -> Poly:
    out = [j * c for j, c in enumerate(p.coeffs)][1:]
    return Poly(out, max(p.formal_degree - 1, 0))


def shift(p: Poly, lam: Scalar) -> Poly:
    """Return ``p(x + lam)`` by binomial expansion."""
    lam = as_fraction(lam)
    cs = p.coeffs
    n = len(cs)
    out = [Fraction(0)] * n
    for i, c in enumerate(cs):
        if c == 0:
            continue
        power = Fraction(1)
        # c * (x + lam)^i; accumulate lam^(i-j) from j = i downward
        for j in range(i, -1, -1):
            out[j] += c * comb(i, j) * power
            power *= lam
    return Poly(out, p.formal_degree)


def dilate(p: Poly, lam: Scalar) -> Poly:
    """Return ``p(lam * x)``."""
    lam = as_fraction(lam)
    out = []
    power = Fraction(1)
    for c in p.coeffs:
        out.append(c * power)
        power *= lam
    return Poly(out, p.formal_degree)


def evaluate(p: Poly, x: Scalar) -> Fraction:
    x = as_fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if b.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    lc = b.leading_coefficient
    bc = b.coeffs
    if len(rem) - 1 < db:
        return Poly.zero(), Poly(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / lc
        quot[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] -= f * bc[j]
    return Poly(quot), Poly(rem[:db])


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divmod_poly(a, b)
    if not r.is_zero:
        raise ArithmeticError("polynomial division is not exact")
    return q


def integer_primitive(p: Poly) -> list[int]:
    """Integer coefficient list of ``p`` scaled by a positive rational to be primitive."""
    if p.is_zero:
        return []
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = gcd(*ints)
    return [c // g for c in ints]


def primitive_part(p: Poly) -> Poly:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    return Poly(integer_primitive(p), p.formal_degree if not p.is_zero else None)


def monic(p: Poly) -> Poly:
    if p.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    return scale(p, 1 / p.leading_coefficient)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; remainders are reduced to primitive parts at every step."""
    a, b = primitive_part(p), primitive_part(q)
    if a.is_zero and b.is_zero:
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    while not b.is_zero:
        _, r = divmod_poly(a, b)
        a, b = b, primitive_part(r)
    return Poly(monic(a).coeffs)


def square_free_part(p: Poly) -> Poly:
    if p.is_zero:
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree == 0:
        return Poly.constant(1)
    return monic(exact_div(p, poly_gcd(p, derivative(p))))


def square_free_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic, pairwise coprime, square-free factors with multiplicities.

    ``prod(f**m)`` equals ``p`` up to its leading coefficient.  Constants
    decompose to an empty list.
    """
    if p.is_zero:
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = c - derivative(b)
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if not d.is_zero else monic(b)
        if a.degree > 0:
            out.append((Poly(a.coeffs), i))
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = c - derivative(b)
        i += 1
    return out


def binomial_weights(k: int) -> list[int]:
    return [comb(k, j) for j in range(k + 1)]
