"""Seeded random instances that satisfy the hypotheses of each theorem.

All generators take a 64-bit seed and are deterministic.  Roots are kept
to small denominators so that expanded coefficients stay modest.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import numpy as np

from .poly import Poly, as_fraction, binomial_weights
from .roots import simplest_between

RATIO_FLOOR = Fraction(17, 16)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed))


def trial_seed(master_seed: int, index: int) -> int:
    """Split hash of ``(master_seed, index)``; independent of execution order."""
    ss = np.random.SeedSequence([int(master_seed), int(index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def random_rational(rng: np.random.Generator, lo, hi, den: int = 16) -> Fraction:
    """Uniform on the grid ``Z/den`` intersected with ``[lo, hi]``."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    a = -((-lo.numerator * den) // lo.denominator)
    b = (hi.numerator * den) // hi.denominator
    return Fraction(int(rng.integers(a, b + 1)), den)


def random_nonzero_int(rng: np.random.Generator, bound: int) -> int:
    v = int(rng.integers(1, bound + 1))
    return v if rng.random() < 0.5 else -v


def _lc(rng: np.random.Generator) -> Fraction:
    return Fraction(random_nonzero_int(rng, 4), int(rng.integers(1, 4)))


def same_sign_roots(degree: int, ratio_bound, rng: np.random.Generator) -> list[Fraction]:
    """Positive rationals whose consecutive ratios lie in ``[17/16, ratio_bound]``."""
    ratio_bound = as_fraction(ratio_bound)
    top = ratio_bound * Fraction(64, 65)
    r = Fraction(int(rng.integers(1, 33)), 8)
    roots = [r]
    for _ in range(degree - 1):
        target = RATIO_FLOOR + (top - RATIO_FLOOR) * Fraction(int(rng.integers(0, 65)), 64)
        if target < RATIO_FLOOR:
            target = RATIO_FLOOR
        r = simplest_between(r * target, r * target * Fraction(65, 64))
        roots.append(r)
    return roots


def gen_same_sign(degree: int, sign: str, ratio_bound, seed: int) -> Poly:
    """``lc * prod(x -+ r_i)`` with ``r_i > 0`` and ratios in ``[1 + 1/16, ratio_bound]``."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if as_fraction(ratio_bound) <= 1:
        raise ValueError("ratio_bound must exceed 1")
    if sign not in ("neg", "pos"):
        raise ValueError("sign must be 'neg' or 'pos'")
    rng = rng_for(seed)
    roots = same_sign_roots(degree, ratio_bound, rng)
    if sign == "neg":
        roots = [-r for r in roots]
    return Poly.from_roots(roots, _lc(rng))


def gen_hyperbolic(degree: int, spread, seed: int) -> Poly:
    """Real-rooted with roots in ``[-spread, spread]``; a double root is injected w.p. 1/8."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    spread = as_fraction(spread)
    rng = rng_for(seed)
    span = int(spread * 8)
    picks = rng.choice(2 * span + 1, size=degree, replace=2 * span + 1 < degree)
    roots = [Fraction(int(i) - span, 8) for i in picks]
    if degree >= 2 and rng.random() < 1 / 8:
        roots[-1] = roots[0]
    return Poly.from_roots(roots, _lc(rng))


def gen_finite_ms(k: int, ratio_bound, seed: int) -> list[Fraction]:
    """γ-vector read off a generated same-sign polynomial ``Q``: ``γ_j = coeff_j(Q) / C(k, j)``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = rng_for(seed)
    sign = "neg" if rng.random() < 0.5 else "pos"
    Q = gen_same_sign(k, sign, ratio_bound, int(rng.integers(0, 2**63)))
    w = binomial_weights(k)
    return [Q.coeff(j) / w[j] for j in range(k + 1)]


def gen_poly(degree: int, seed: int, height: int = 9) -> Poly:
    """Random rational coefficients, nonzero leading term, formal degree ``degree``."""
    rng = rng_for(seed)
    cs = [Fraction(int(rng.integers(-height, height + 1)), int(rng.integers(1, 5))) for _ in range(degree)]
    cs.append(Fraction(random_nonzero_int(rng, height), int(rng.integers(1, 5))))
    return Poly(cs, degree)


def gen_int_poly(degree: int, seed: int, height: int = 10) -> Poly:
    """Random integer coefficients with nonzero leading term."""
    rng = rng_for(seed)
    cs = [int(rng.integers(-height, height + 1)) for _ in range(degree)]
    cs.append(random_nonzero_int(rng, height))
    return Poly(cs)


def gen_interlacing_pair(degree: int, seed: int, shared: bool = False) -> tuple[Poly, Poly]:
    """Two polynomials of equal degree whose roots alternate.

    With ``shared`` a few neighbouring roots are merged, giving non-strict
    interlacing.
    """
    rng = rng_for(seed)
    pts = sorted(set(random_rational(rng, -8, 8, 16) for _ in range(6 * degree)))
    while len(pts) < 2 * degree:
        pts.append(pts[-1] + 1)
    idx = sorted(rng.choice(len(pts), size=2 * degree, replace=False).tolist())
    chosen = [pts[i] for i in idx]
    xs, ys = chosen[0::2], chosen[1::2]
    if shared:
        for i in range(degree):
            if rng.random() < 0.35:
                ys[i] = xs[i]
    if rng.random() < 0.5:
        xs, ys = ys, xs
    return Poly.from_roots(xs, _lc(rng)), Poly.from_roots(ys, _lc(rng))


def gen_ms_prefix(K: int, seed: int) -> list[Fraction]:
    """Prefix ``α_0..α_K`` of a classical multiplier sequence.

    Pointwise product of randomly chosen factors, each a multiplier
    sequence: ``q^(n^2)`` with ``0 < q <= 1``, ``h(n)`` with ``h`` having only
    negative zeros, and ``1/(n+b)!``.
    """
    rng = rng_for(seed)
    alphas = [Fraction(1)] * (K + 1)
    if rng.random() < 0.6:
        q = Fraction(int(rng.integers(1, 9)), 8)
        alphas = [a * q ** (n * n) for n, a in enumerate(alphas)]
    for _ in range(int(rng.integers(0, 3))):
        c = Fraction(int(rng.integers(1, 17)), 4)
        alphas = [a * (n + c) for n, a in enumerate(alphas)]
    if rng.random() < 0.6:
        b = int(rng.integers(0, 3))
        alphas = [a / factorial(n + b) for n, a in enumerate(alphas)]
    return alphas
