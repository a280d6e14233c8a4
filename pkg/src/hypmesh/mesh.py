"""Mesh, logarithmic mesh and exact interlacing.

Enclosures refine isolating intervals until the minimal gap (or minimal
ratio of consecutive root magnitudes) is pinned within a tolerance.  The
threshold predicates never look at enclosures: they compare the roots of
``p`` with those of ``p(x + lam)`` or ``p(lam x)`` exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2

from .errors import (
    DegreeGapTooLarge,
    DegreeTooLow,
    LambdaNotAboveOne,
    MixedSigns,
    NotHyperbolic,
    PreconditionError,
    RefinementBudgetExceeded,
    RootAtZero,
    ZeroPolynomial,
)
from .poly import (
    Poly,
    as_fraction,
    dilate,
    exact_div,
    multiply,
    poly_gcd,
    shift,
    square_free_decompose,
    square_free_part,
)
from .roots import (
    IsolatingInterval,
    SignClass,
    SturmChain,
    assign_multiplicities,
    cauchy_bound,
    is_hyperbolic,
    isolate_in,
    refine,
    refine_step,
    root_sign_class,
    sturm_chain,
    try_exact,
)


@dataclass(frozen=True)
class MeshEnclosure:
    lo: Fraction
    hi: Fraction
    exact: bool

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi


class InterlaceKind(enum.Enum):
    STRICT = "StrictInterlacing"
    NON_STRICT = "NonStrictInterlacing"
    NOT = "NotInterlacing"


@dataclass(frozen=True)
class InterlacingVerdict:
    kind: InterlaceKind
    common_root_count: int

    @property
    def interlacing(self) -> bool:
        return self.kind is not InterlaceKind.NOT


def _bits(tol: Fraction) -> int:
    return max(1, ceil(log2(1 / tol))) if tol < 1 else 1


def default_budget(degree: int, tol: Fraction) -> int:
    return 10 * max(degree, 1) * _bits(tol)


def _require_hyperbolic(p: Poly, name: str = "p") -> None:
    if p.is_zero:
        raise ZeroPolynomial(f"{name} is the zero polynomial")
    if not is_hyperbolic(p):
        raise NotHyperbolic(f"{name} = {p} is not real-rooted")


# ---------------------------------------------------------------- interlacing


def _merged_roots(f: Poly, g: Poly) -> tuple[list[int], list[int]]:
    """Roots of ``f`` and ``g`` (with multiplicity) as indices into their merged distinct order."""
    sf, sg = square_free_part(f), square_free_part(g)
    union = exact_div(multiply(sf, sg), poly_gcd(sf, sg))
    if union.degree == 0:
        return [], []
    ch = sturm_chain(union)
    bound = cauchy_bound(union)
    ivs = isolate_in(ch, -bound, bound, 2 * bound)
    mf = assign_multiplicities(square_free_decompose(f), ivs) if f.degree else [0] * len(ivs)
    mg = assign_multiplicities(square_free_decompose(g), ivs) if g.degree else [0] * len(ivs)
    xs = [i for i, m in enumerate(mf) for _ in range(m)]
    ys = [i for i, m in enumerate(mg) for _ in range(m)]
    return xs, ys


def _chain_holds(first: list[int], second: list[int], strict: bool) -> bool:
    if not (len(first) == len(second) or len(first) == len(second) + 1):
        return False
    merged = []
    for i, a in enumerate(first):
        merged.append(a)
        if i < len(second):
            merged.append(second[i])
    if strict:
        return all(u < v for u, v in zip(merged, merged[1:]))
    return all(u <= v for u, v in zip(merged, merged[1:]))


def interlace(f: Poly, g: Poly) -> InterlacingVerdict:
    """Exact interlacing decision for two real-rooted polynomials.

    Sorted roots (with multiplicity) must alternate, ``x1 <= y1 <= x2 <= ...``
    or ``y1 <= x1 <= y2 <= ...``.  Strict means every inequality is strict,
    which forces simple roots and no common root.
    """
    _require_hyperbolic(f, "f")
    _require_hyperbolic(g, "g")
    if abs(f.degree - g.degree) > 1:
        raise DegreeGapTooLarge(f"degrees {f.degree} and {g.degree} differ by more than one")
    xs, ys = _merged_roots(f, g)
    common = len(set(xs) & set(ys))
    if _chain_holds(xs, ys, True) or _chain_holds(ys, xs, True):
        return InterlacingVerdict(InterlaceKind.STRICT, 0)
    if _chain_holds(xs, ys, False) or _chain_holds(ys, xs, False):
        return InterlacingVerdict(InterlaceKind.NON_STRICT, common)
    return InterlacingVerdict(InterlaceKind.NOT, common)


# ---------------------------------------------------------------- enclosures


def _gap_bounds(ivs: list[IsolatingInterval]) -> list[tuple[Fraction, Fraction]]:
    return [(b.lo - a.hi, b.hi - a.lo) for a, b in zip(ivs, ivs[1:])]


def _ratio_bounds(ivs: list[IsolatingInterval]) -> list[tuple[Fraction, Fraction]]:
    return [(b.lo / a.hi, b.hi / a.lo) for a, b in zip(ivs, ivs[1:])]


def _minimize(
    ch: SturmChain,
    ivs: list[IsolatingInterval],
    bounds_fn,
    tol: Fraction,
    budget: int,
) -> MeshEnclosure:
    """Refine until the minimum of the pairwise quantities is enclosed within ``tol``."""
    exact_tried = False
    for _ in range(budget):
        bounds = bounds_fn(ivs)
        lo = min(b[0] for b in bounds)
        hi = min(b[1] for b in bounds)
        if hi - lo <= tol:
            if lo == hi:
                return MeshEnclosure(lo, hi, True)
            if not exact_tried:
                # settle rational roots so that rational answers come out exact
                exact_tried = True
                cands = {i for j, b in enumerate(bounds) if b[0] <= hi for i in (j, j + 1)}
                for i in cands:
                    ivs[i] = try_exact(ch, ivs[i])
                continue
            return MeshEnclosure(lo, hi, False)
        cands = {i for j, b in enumerate(bounds) if b[0] < hi for i in (j, j + 1)}
        for i in cands:
            ivs[i] = refine_step(ch, ivs[i])
    raise RefinementBudgetExceeded(f"enclosure not within {tol} after {budget} refinement rounds")


def _as_tol(tol) -> Fraction:
    tol = as_fraction(tol)
    if tol <= 0:
        raise PreconditionError("tolerance must be positive")
    return tol


def mesh_enclosure(p: Poly, tol=Fraction(1, 10**9), budget: int | None = None) -> MeshEnclosure:
    """Enclosure of the minimal distance between roots; exact 0 at a multiple root."""
    tol = _as_tol(tol)
    _require_hyperbolic(p)
    if p.degree < 2:
        raise DegreeTooLow("mesh needs degree >= 2")
    ch = sturm_chain(p)
    if ch.degree < p.degree:
        return MeshEnclosure(Fraction(0), Fraction(0), True)
    bound = cauchy_bound(p)
    ivs = isolate_in(ch, -bound, bound, 2 * bound)
    budget = budget or default_budget(p.degree, tol)
    return _minimize(ch, ivs, _gap_bounds, tol, budget)


def _same_sign_positive(p: Poly) -> Poly:
    """Validate lmesh preconditions; return ``p`` mirrored so that its roots are positive."""
    _require_hyperbolic(p)
    if p.degree < 2:
        raise DegreeTooLow("lmesh needs degree >= 2")
    cls = root_sign_class(p)
    if cls is SignClass.HAS_ZERO_ROOT:
        raise RootAtZero("lmesh is undefined with a root at zero")
    if cls is SignClass.MIXED:
        raise MixedSigns("roots are not all of the same sign")
    return dilate(p, -1) if cls is SignClass.ALL_NEGATIVE else p


def lmesh_enclosure(p: Poly, tol=Fraction(1, 10**9), budget: int | None = None) -> MeshEnclosure:
    """Enclosure of ``min |x_{j+1}| / |x_j|`` over consecutive root magnitudes."""
    tol = _as_tol(tol)
    q = _same_sign_positive(p)
    ch = sturm_chain(q)
    if ch.degree < q.degree:
        return MeshEnclosure(Fraction(1), Fraction(1), True)
    bound = cauchy_bound(q)
    ivs = isolate_in(ch, Fraction(0), bound, bound)
    for i, iv in enumerate(ivs):
        while iv.lo <= 0:
            iv = refine_step(ch, iv)
        ivs[i] = iv
    budget = budget or default_budget(p.degree, tol)
    enc = _minimize(ch, ivs, _ratio_bounds, tol, budget)
    if enc.lo < 1:  # simple roots: the true ratio exceeds 1
        enc = MeshEnclosure(Fraction(1), max(enc.hi, Fraction(1)), enc.exact)
    return enc


# ---------------------------------------------------------------- predicates


def _mesh_verdict(p: Poly, lam) -> InterlacingVerdict:
    lam = as_fraction(lam)
    _require_hyperbolic(p)
    if p.degree < 2:
        raise DegreeTooLow("mesh needs degree >= 2")
    if lam <= 0:
        raise PreconditionError("lambda must be positive")
    return interlace(p, shift(p, lam))


def mesh_exceeds(p: Poly, lam) -> bool:
    """``lam < M(p)``, decided by strict interlacing of ``p(x)`` and ``p(x + lam)``."""
    return _mesh_verdict(p, lam).kind is InterlaceKind.STRICT


def mesh_at_least(p: Poly, lam) -> bool:
    """``lam <= M(p)``: the shifted pair still interlaces, possibly with shared roots."""
    return _mesh_verdict(p, lam).interlacing


def _lmesh_verdict(p: Poly, lam) -> InterlacingVerdict:
    lam = as_fraction(lam)
    _require_hyperbolic(p)
    if p.coeff(0) == 0 and not p.is_zero:
        raise RootAtZero("lmesh is undefined with a root at zero")
    if root_sign_class(p) is SignClass.MIXED:
        raise MixedSigns("roots are not all of the same sign")
    if lam <= 1:
        raise LambdaNotAboveOne(f"lambda must exceed 1, got {lam}")
    return interlace(p, dilate(p, lam))


def lmesh_exceeds(p: Poly, lam) -> bool:
    """``lam < lmesh(p)``, decided by strict interlacing of ``p(x)`` and ``p(lam x)``."""
    return _lmesh_verdict(p, lam).kind is InterlaceKind.STRICT


def lmesh_at_least(p: Poly, lam) -> bool:
    """``lam <= lmesh(p)``."""
    return _lmesh_verdict(p, lam).interlacing
