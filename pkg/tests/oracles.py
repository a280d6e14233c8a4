"""Independent numeric and closed-form oracles, used only by the tests."""

from fractions import Fraction

import numpy as np
import sympy

from hypmesh import Poly

CLEARLY_REAL = 1e-9
CLEARLY_COMPLEX = 1e-3


def _ints(p: Poly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // np.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs]


def _quartic_all_real(e, d, c, b, a) -> bool:
    disc = (
        256 * a**3 * e**3 - 192 * a**2 * b * d * e**2 - 128 * a**2 * c**2 * e**2
        + 144 * a**2 * c * d**2 * e - 27 * a**2 * d**4 + 144 * a * b**2 * c * e**2
        - 6 * a * b**2 * d**2 * e - 80 * a * b * c**2 * d * e + 18 * a * b * c * d**3
        + 16 * a * c**4 * e - 4 * a * c**3 * d**2 - 27 * b**4 * e**2 + 18 * b**3 * c * d * e
        - 4 * b**3 * d**3 - 4 * b**2 * c**3 * e + b**2 * c**2 * d**2
    )
    P = 8 * a * c - 3 * b**2
    R = b**3 + 8 * d * a**2 - 4 * a * b * c
    D0 = c**2 - 3 * b * d + 12 * a * e
    D = 64 * a**3 * e - 16 * a**2 * c**2 + 16 * a * b**2 * c - 16 * a**2 * b * d - 3 * b**4
    if disc < 0:
        return False
    if disc > 0:
        return P < 0 and D < 0
    if P < 0 and D < 0 and D0 != 0:
        return True
    if D > 0 or (P > 0 and (D != 0 or R != 0)):
        return False
    if D0 == 0 and D != 0:
        return True
    if D == 0:
        if P < 0:
            return True
        if P > 0 and R == 0:
            return False
        if D0 == 0:
            return True
    raise AssertionError("unclassified quartic")


def closed_form_hyperbolic(p: Poly) -> bool:
    cs = _ints(p)
    n = len(cs) - 1
    if n <= 1:
        return True
    if n == 2:
        c, b, a = cs
        return b * b - 4 * a * c >= 0
    if n == 3:
        d, c, b, a = cs
        disc = 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2
        return disc >= 0
    if n == 4:
        return _quartic_all_real(*cs)
    raise ValueError("closed form only up to degree 4")


def numeric_roots(p: Poly) -> np.ndarray:
    return np.roots([float(c) for c in reversed(p.coeffs)])


def numeric_hyperbolic(p: Poly) -> tuple[bool | None, str]:
    """Companion-matrix verdict, or None when inside the safety margin."""
    z = numeric_roots(p)
    if len(z) == 0:
        return True, "numeric"
    scale = max(1.0, float(np.max(np.abs(z))))
    im = np.abs(z.imag) / scale
    if np.all(im < CLEARLY_REAL):
        return True, "numeric"
    if np.any(im > CLEARLY_COMPLEX):
        return False, "numeric"
    return None, "ambiguous"


def sympy_real_root_count(p: Poly) -> int:
    """Real roots counted with multiplicity, via sympy's own isolation."""
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**j for j, c in enumerate(p.coeffs))
    return len(sympy.real_roots(sympy.Poly(expr, x)))


def oracle_hyperbolic(p: Poly) -> tuple[bool, str]:
    if p.degree <= 4:
        return closed_form_hyperbolic(p), "closed-form"
    verdict, how = numeric_hyperbolic(p)
    if verdict is None:
        return sympy_real_root_count(p) == p.degree, "sympy"
    return verdict, how


def oracle_real_roots(p: Poly, tol: float = 1e-6) -> list[float] | None:
    """Numerically real roots (with multiplicity), or None if any root is borderline."""
    z = numeric_roots(p)
    scale = max(1.0, float(np.max(np.abs(z)))) if len(z) else 1.0
    out = []
    for r in z:
        im = abs(r.imag) / scale
        if im < CLEARLY_REAL:
            out.append(float(r.real))
        elif im <= CLEARLY_COMPLEX:
            return None
    return sorted(out)


def random_integer_polys(n: int, seed: int, max_degree: int = 6) -> list[Poly]:
    """Half dense random integer polynomials, half products of small integer factors."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        deg = int(rng.integers(1, max_degree + 1))
        if i % 2 == 0:
            cs = [int(c) for c in rng.integers(-10, 11, size=deg)] + [int(rng.choice([-3, -2, -1, 1, 2, 3]))]
            out.append(Poly(cs))
            continue
        p = Poly([int(rng.choice([-2, -1, 1, 2]))])
        while p.degree < deg:
            if deg - p.degree >= 2 and rng.random() < 0.3:
                f = Poly([int(rng.integers(-6, 7)), int(rng.integers(-4, 5)), 1])
            else:
                f = Poly([int(rng.integers(-5, 6)), 1])
            p = p * f
        out.append(p)
    return out


def brute_mesh(roots: list[float]) -> float:
    r = sorted(roots)
    return min(b - a for a, b in zip(r, r[1:]))


def brute_lmesh(roots: list[float]) -> float:
    r = sorted(abs(x) for x in roots)
    return min(b / a for a, b in zip(r, r[1:]))


def as_fraction_list(xs) -> list[Fraction]:
    return [Fraction(x) for x in xs]
