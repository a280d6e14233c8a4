"""Hyperbolicity preservers: diagonal operators, Schur-Szego composition,
constant-coefficient differential operators and the ``lam + a x d/dx`` family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegreeMismatch,
    FormalDegreeMismatch,
    NotMultiplierSequencePrefix,
    PrefixTooShort,
    PreconditionError,
    SequenceTooShort,
    ZeroGamma,
)
from .mesh import MeshEnclosure, lmesh_enclosure
from .poly import (
    Poly,
    add_scaled,
    as_fraction,
    binomial_weights,
    derivative,
    exact_div,
    multiply,
    poly_gcd,
)
from .roots import (
    SignClass,
    cauchy_bound,
    is_hyperbolic,
    isolate_in,
    root_sign_class,
    sturm_chain,
)

SAME_SIGN = (SignClass.ALL_NEGATIVE, SignClass.ALL_POSITIVE)


def schur_szego(P: Poly, Q: Poly, k: int) -> Poly:
    """Composition ``sum C(k,j) a_j b_j x^j`` where ``P = sum C(k,j) a_j x^j`` and likewise ``Q``."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    if P.formal_degree != k or Q.formal_degree != k:
        raise FormalDegreeMismatch(
            f"formal degrees {P.formal_degree} and {Q.formal_degree} must both equal k={k}"
        )
    w = binomial_weights(k)
    return Poly([P.coeff(j) * Q.coeff(j) / w[j] for j in range(k + 1)], k)


def symbol_poly(gammas: Sequence) -> Poly:
    """``Q_T(t) = sum C(k,j) gamma_j t^j`` for a length-(k+1) sequence."""
    gs = [as_fraction(g) for g in gammas]
    k = len(gs) - 1
    w = binomial_weights(k)
    return Poly([w[j] * gs[j] for j in range(k + 1)], k)


def gammas_from_symbol(Q: Poly) -> list[Fraction]:
    k = Q.formal_degree
    w = binomial_weights(k)
    return [Q.coeff(j) / w[j] for j in range(k + 1)]


def _same_sign_rooted(Q: Poly) -> bool:
    if Q.degree == 0:
        return True
    return is_hyperbolic(Q) and root_sign_class(Q) in SAME_SIGN


@dataclass(frozen=True)
class FiniteMultiplierSeq:
    """A γ-vector together with its symbol polynomial."""

    gammas: tuple[Fraction, ...]
    symbol_poly: Poly

    @classmethod
    def from_gammas(cls, gammas: Sequence) -> FiniteMultiplierSeq:
        gs = tuple(as_fraction(g) for g in gammas)
        if any(g == 0 for g in gs):
            raise ZeroGamma("all gammas must be nonzero")
        return cls(gs, symbol_poly(gs))

    @property
    def k(self) -> int:
        return len(self.gammas) - 1

    def __mul__(self, other: FiniteMultiplierSeq) -> FiniteMultiplierSeq:
        if len(self.gammas) != len(other.gammas):
            raise SequenceTooShort("multiplier sequences must have equal length")
        return FiniteMultiplierSeq.from_gammas([a * b for a, b in zip(self.gammas, other.gammas)])

    def is_valid(self) -> bool:
        return _same_sign_rooted(self.symbol_poly)


def is_finite_ms(gammas: Sequence) -> tuple[bool, Poly]:
    """Decide whether ``gammas`` is a finite multiplier sequence; the certificate is ``Q_T``.

    Zero entries raise :class:`ZeroGamma`.  For length 1 any nonzero scalar
    qualifies (the symbol is a nonzero constant).
    """
    ms = FiniteMultiplierSeq.from_gammas(gammas)
    return ms.is_valid(), ms.symbol_poly


def apply_diagonal(gammas: Sequence, p: Poly) -> Poly:
    if len(gammas) < p.formal_degree + 1:
        raise SequenceTooShort(
            f"need {p.formal_degree + 1} multipliers, got {len(gammas)}"
        )
    gs = [as_fraction(g) for g in gammas]
    return Poly([gs[j] * c for j, c in enumerate(p.coeffs)], p.formal_degree)


@dataclass(frozen=True)
class DiffOpConst:
    """``sum a_i (d/dx)^i``, stored as its symbol ``sum a_i t^i``."""

    symbol: Poly

    @property
    def order(self) -> int:
        return self.symbol.degree

    def is_hpo(self) -> bool:
        return is_hpo(self)

    def __call__(self, p: Poly) -> Poly:
        return apply_diff_op(self, p)


def is_hpo(op: DiffOpConst) -> bool:
    """A constant-coefficient operator preserves real-rootedness iff its symbol is real-rooted."""
    return not op.symbol.is_zero and is_hyperbolic(op.symbol)


def apply_diff_op(op: DiffOpConst, p: Poly) -> Poly:
    out = Poly.zero()
    dp = p
    for a in op.symbol.coeffs:
        if dp.is_zero:
            break
        if a:
            out = add_scaled(out, dp, 1, a)
        dp = derivative(dp)
    return out.with_formal_degree(p.formal_degree)


def theta_op(lam, a, p: Poly) -> Poly:
    """``lam * p + a * x * p'``; coefficient ``c_j`` becomes ``(lam + a j) c_j``."""
    lam, a = as_fraction(lam), as_fraction(a)
    return Poly([(lam + a * j) * c for j, c in enumerate(p.coeffs)], p.formal_degree)


def theta_rep_poly(a, k: int) -> Poly:
    """``(x+1)^(k-1) ((1+ak)x + 1)``: Schur-Szego composition with it acts as ``1 + a x d/dx``."""
    a = as_fraction(a)
    if k < 1:
        raise PreconditionError("k must be at least 1")
    out = Poly((1, 1 + a * k))
    for _ in range(k - 1):
        out = multiply(out, Poly((1, 1)))
    return out.with_formal_degree(k)


def _strip_zero_roots(p: Poly) -> Poly:
    cs = list(p.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
    return Poly(cs)


def _passes_condition_iv(T: Poly) -> bool:
    if T.is_zero:
        return True
    if not is_hyperbolic(T):
        return False
    rest = _strip_zero_roots(T)
    return rest.degree == 0 or root_sign_class(rest) in SAME_SIGN


def polya_schur_partial_check(alphas: Sequence, K: int) -> tuple[bool, int | None]:
    """Check ``T[(1+x)^k]`` is real-rooted with same-sign roots for ``k = 0..K``.

    Necessary for a multiplier sequence, never sufficient.  Roots at zero
    are allowed; the zero polynomial counts as passing.
    """
    if K < 0:
        raise PreconditionError("K must be nonnegative")
    if len(alphas) < K + 1:
        raise PrefixTooShort(f"need {K + 1} terms, got {len(alphas)}")
    al = [as_fraction(a) for a in alphas]
    for k in range(K + 1):
        if not _passes_condition_iv(symbol_poly(al[: k + 1])):
            return False, k
    return True, None


def truncation_symbols(alphas: Sequence, K: int) -> list[Poly]:
    al = [as_fraction(a) for a in alphas]
    return [symbol_poly(al[: k + 1]) for k in range(K + 1)]


def sequence_lmesh_upto(alphas: Sequence, K: int, tol=Fraction(1, 10**9)) -> MeshEnclosure:
    """Enclosure of ``min_{2<=k<=K} lmesh(Q_{A_k})``, an upper bound on the sequence's lmesh."""
    if K < 2:
        raise PreconditionError("K must be at least 2")
    if len(alphas) < K + 1:
        raise PrefixTooShort(f"need {K + 1} terms, got {len(alphas)}")
    al = [as_fraction(a) for a in alphas]
    encs = []
    for k in range(2, K + 1):
        try:
            ok, Q = is_finite_ms(al[: k + 1])
        except ZeroGamma:
            ok = False
        if not ok:
            raise NotMultiplierSequencePrefix(k)
        encs.append(lmesh_enclosure(Q, tol))
    lo = min(e.lo for e in encs)
    hi = min(e.hi for e in encs)
    return MeshEnclosure(lo, hi, lo == hi)


# ---------------------------------------------------------------- pencils


def projective_grid(n: int) -> list[tuple[Fraction, Fraction]]:
    """``n`` rational directions ``(c, d)`` spread over the projective line.

    Direction ``i`` is the rational point ``((1-t^2)/(1+t^2), 2t/(1+t^2))`` of
    the unit circle with ``t`` a rational approximation of ``tan(pi i / 2n)``.
    """
    out = []
    for i in range(n):
        if i == 0:
            out.append((Fraction(1), Fraction(0)))
            continue
        t = Fraction(math.tan(math.pi * i / (2 * n))).limit_denominator(64 * n)
        s = 1 + t * t
        out.append(((1 - t * t) / s, 2 * t / s))
    return out


def _pencil_fails(f: Poly, g: Poly, c: Fraction, d: Fraction) -> bool:
    h = add_scaled(f, g, c, d)
    return not h.is_zero and not is_hyperbolic(h)


def _critical_directions(f: Poly, g: Poly) -> list[tuple[Fraction, Fraction]]:
    """Directions near the critical values of ``f/g`` (where pencil roots collide)."""
    w = add_scaled(multiply(derivative(f), g), multiply(f, derivative(g)), 1, -1)
    if w.is_zero or w.degree == 0:
        return []
    ch = sturm_chain(w)
    bound = cauchy_bound(w)
    out = []
    for iv in isolate_in(ch, -bound, bound, Fraction(1, 2**20)):
        x = iv.hi
        gx = g(x)
        if gx == 0:
            continue
        s = f(x) / gx
        for e in (Fraction(1, 2**j) for j in range(2, 40, 3)):
            for ds in (e, -e):
                out.append((Fraction(1), -(s + ds * (1 + abs(s)))))
    return out


def find_nonhyperbolic_pencil(
    f: Poly, g: Poly, grid_size: int = 256, refine_critical: bool = True
) -> tuple[Fraction, Fraction] | None:
    """Search for ``(c, d)`` with ``c f + d g`` not real-rooted.

    Scans a deterministic projective grid first; when that finds nothing,
    probes directions next to the critical values of ``f/g``.  ``None`` is
    not a proof of interlacing.
    """
    if f.is_zero or g.is_zero:
        raise PreconditionError("pencil members must be nonzero")
    if f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} and {g.degree} differ")
    if f.degree == 0 or exact_div(f, poly_gcd(f, g)).degree == 0:
        return None  # proportional pencil
    for c, d in projective_grid(grid_size):
        if _pencil_fails(f, g, c, d):
            return c, d
    if refine_critical:
        for c, d in _critical_directions(f, g):
            if _pencil_fails(f, g, c, d):
                return c, d
    return None
