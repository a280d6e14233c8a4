"""Seeded verification campaigns, one per theorem or identity.

Every campaign is a pair of functions: ``generate(rng, degree)`` draws the
inputs of one trial and ``check(inputs, tol)`` runs the exact test on them.
Inputs are serialized into the report, so any failure record can be
re-parsed and re-checked with :func:`replay`.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import generators as gen
from .errors import HypmeshError, InvalidConfig
from .mesh import (
    InterlaceKind,
    MeshEnclosure,
    interlace,
    lmesh_at_least,
    lmesh_enclosure,
    lmesh_exceeds,
    mesh_at_least,
    mesh_enclosure,
    mesh_exceeds,
)
from .notation import format_poly, format_seq, parse_poly, parse_rational, parse_seq
from .poly import Poly, add_scaled, derivative, dilate, multiply
from .preservers import (
    DiffOpConst,
    find_nonhyperbolic_pencil,
    is_finite_ms,
    polya_schur_partial_check,
    schur_szego,
    symbol_poly,
    theta_op,
    theta_rep_poly,
)
from .roots import is_hyperbolic

DEFAULT_TOL = Fraction(1, 10**9)


class TheoremId(str, enum.Enum):
    RIESZ = "riesz"
    CONST_COEFF_MESH = "const_coeff_mesh"
    SCHUR_SZEGO_LMESH = "schur_szego_lmesh"
    THETA_LMESH = "theta_lmesh"
    LEMMA_I = "lemma_i"
    LEMMA_II = "lemma_ii"
    LEMMA_III = "lemma_iii"
    IDENTITY_LEIBNIZ = "identity_leibniz"
    IDENTITY_THETA_REP = "identity_theta_rep"
    COR_INF = "cor_inf"
    POLYA_SCHUR_IV = "polya_schur_iv"


# degrees below these make the statement vacuous or undefined
MIN_DEGREE = {
    TheoremId.RIESZ: 2,
    TheoremId.CONST_COEFF_MESH: 2,
    TheoremId.SCHUR_SZEGO_LMESH: 2,
    TheoremId.THETA_LMESH: 2,
    TheoremId.LEMMA_I: 1,
    TheoremId.LEMMA_II: 1,
    TheoremId.LEMMA_III: 2,
    TheoremId.IDENTITY_LEIBNIZ: 0,
    TheoremId.IDENTITY_THETA_REP: 1,
    TheoremId.COR_INF: 2,
    TheoremId.POLYA_SCHUR_IV: 0,
}


@dataclass(frozen=True)
class TrialConfig:
    theorem_id: TheoremId
    trials: int
    degree_min: int
    degree_max: int
    seed: int
    tol: Fraction = DEFAULT_TOL

    def validate(self) -> None:
        if self.trials < 1:
            raise InvalidConfig("trials must be at least 1")
        if self.degree_min > self.degree_max:
            raise InvalidConfig("degree_min exceeds degree_max")
        need = MIN_DEGREE[TheoremId(self.theorem_id)]
        if self.degree_min < need:
            raise InvalidConfig(f"{self.theorem_id.value} needs degree_min >= {need}")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfig("seed must be a 64-bit unsigned integer")
        if self.tol <= 0:
            raise InvalidConfig("tol must be positive")

    def echo(self) -> dict:
        return {
            "theorem_id": TheoremId(self.theorem_id).value,
            "trials": self.trials,
            "degree_min": self.degree_min,
            "degree_max": self.degree_max,
            "seed": self.seed,
            "tol": str(self.tol),
        }


@dataclass
class TrialOutcome:
    ok: bool
    observed: dict = field(default_factory=dict)
    vacuous: bool = False


@dataclass
class TrialReport:
    config: dict
    passed: int
    failed: int
    failures: list[dict]
    wall_time: float
    vacuous: int = 0
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, include_time: bool = True) -> str:
        d = self.to_dict()
        if not include_time:
            d.pop("wall_time")
        return json.dumps(d, sort_keys=True, indent=2)


# ---------------------------------------------------------------- helpers


def _s(x) -> str:
    """Serialize one input value."""
    if isinstance(x, Poly):
        return format_poly(x)
    if isinstance(x, (list, tuple)):
        return format_seq(x)
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return str(x)


def _d(text: str):
    if text.startswith(("coeffs:", "roots:")):
        return parse_poly(text)
    if text.startswith("seq:"):
        return parse_seq(text)
    try:
        return parse_rational(text)
    except HypmeshError:
        return text


def _enc(e: MeshEnclosure) -> dict:
    return {"lo": str(e.lo), "hi": str(e.hi), "exact": e.exact, "approx": float(e.lo)}


def _sub_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**63))


def _sign(rng: np.random.Generator) -> str:
    return "neg" if rng.random() < 0.5 else "pos"


def _unit(rng: np.random.Generator, lo: int = 1, hi: int = 63, den: int = 64) -> Fraction:
    return Fraction(int(rng.integers(lo, hi + 1)), den)


def _max_enclosure(encs: list[MeshEnclosure]) -> tuple[Fraction, bool]:
    """Lower bound of ``max`` of enclosed values and whether it is attained exactly."""
    lo = max(e.lo for e in encs)
    attained = any(e.exact and e.lo == lo for e in encs)
    return lo, attained


def _lmesh_dominates(S: Poly, encs: list[MeshEnclosure]) -> tuple[bool, dict]:
    """Exact check of ``lmesh(S) >= max`` of the enclosed values."""
    lam, attained = _max_enclosure(encs)
    obs = {"lambda": str(lam), "predicate": "lmesh_at_least" if attained else "lmesh_exceeds"}
    if lam <= 1:
        return True, {**obs, "vacuous": True}
    ok = lmesh_at_least(S, lam) if attained else lmesh_exceeds(S, lam)
    return ok, obs


def _mesh_dominates(q: Poly, enc: MeshEnclosure) -> tuple[bool, dict]:
    """Exact check of ``M(q) >= M(p)`` given an enclosure of ``M(p)``."""
    if enc.exact:
        mu = enc.lo
        obs = {"mu": str(mu), "predicate": "mesh_at_least"}
        if mu <= 0:
            return True, {**obs, "vacuous": True}
        return mesh_at_least(q, mu), obs
    mu = enc.lo - enc.width
    obs = {"mu": str(mu), "predicate": "mesh_exceeds"}
    if mu <= 0:
        return True, {**obs, "vacuous": True}
    return mesh_exceeds(q, mu), obs


def _outcome(ok: bool, obs: dict) -> TrialOutcome:
    return TrialOutcome(ok, obs, bool(obs.pop("vacuous", False)))


# ---------------------------------------------------------------- campaigns


def _gen_riesz(rng, k):
    lam = gen.random_rational(rng, -4, 4, 8)
    while lam == 0:
        lam = gen.random_rational(rng, -4, 4, 8)
    p = gen.gen_hyperbolic(k, 10, _sub_seed(rng))
    if rng.random() < 0.5:
        # p - mu p' is real-rooted with (generically) irrational roots
        p = DiffOpConst(Poly((1, -gen.random_rational(rng, -2, 2, 8))))(p)
    return {"p": p, "lambda": lam}


def _check_riesz(inp, tol):
    p, lam = inp["p"], inp["lambda"]
    q = DiffOpConst(Poly((1, -lam)))(p)
    enc = mesh_enclosure(p, tol)
    ok, obs = _mesh_dominates(q, enc)
    obs["mesh_p"] = _enc(enc)
    if not ok:
        obs["mesh_Ap"] = _enc(mesh_enclosure(q, tol))
    return _outcome(ok, obs)


def _gen_const(rng, k):
    order = int(rng.integers(0, 4))
    roots = [gen.random_rational(rng, -3, 3, 4) for _ in range(order)]
    symbol = Poly.from_roots(roots, gen.random_nonzero_int(rng, 3))
    return {"p": gen.gen_hyperbolic(k, 10, _sub_seed(rng)), "symbol": symbol}


def _check_const(inp, tol):
    p, op = inp["p"], DiffOpConst(inp["symbol"])
    if not op.is_hpo():
        return TrialOutcome(False, {"error": "generated symbol is not real-rooted"})
    q = op(p)
    if q.is_zero or q.degree < 2:
        return TrialOutcome(True, {"deg_Ap": 0 if q.is_zero else q.degree}, vacuous=True)
    enc = mesh_enclosure(p, tol)
    ok, obs = _mesh_dominates(q, enc)
    obs["mesh_p"] = _enc(enc)
    if not ok:
        obs["mesh_Ap"] = _enc(mesh_enclosure(q, tol))
    return _outcome(ok, obs)


def _gen_schur(rng, k):
    return {
        "P": gen.gen_same_sign(k, _sign(rng), 8, _sub_seed(rng)),
        "Q": gen.gen_same_sign(k, _sign(rng), 8, _sub_seed(rng)),
    }


def _check_schur(inp, tol):
    P, Q = inp["P"], inp["Q"]
    k = P.formal_degree
    S = schur_szego(P, Q, k)
    encs = [lmesh_enclosure(P, tol), lmesh_enclosure(Q, tol)]
    ok, obs = _lmesh_dominates(S, encs)
    obs.update(lmesh_P=_enc(encs[0]), lmesh_Q=_enc(encs[1]))
    if not ok:
        obs["lmesh_PQ"] = _enc(lmesh_enclosure(S, tol))
    return _outcome(ok, obs)


def _gen_theta(rng, k):
    return {
        "p": gen.gen_same_sign(k, _sign(rng), 8, _sub_seed(rng)),
        "lambda": gen.random_rational(rng, Fraction(1, 8), 4, 8),
    }


def _check_theta(inp, tol):
    p = inp["p"]
    q = theta_op(inp["lambda"], 1, p)
    enc = lmesh_enclosure(p, tol)
    ok, obs = _lmesh_dominates(q, [enc])
    obs["lmesh_p"] = _enc(enc)
    if not ok:
        obs["lmesh_Tp"] = _enc(lmesh_enclosure(q, tol))
    return _outcome(ok, obs)


def _random_pencil(rng) -> tuple[Fraction, Fraction]:
    while True:
        c = Fraction(int(rng.integers(-1000, 1001)), int(rng.integers(1, 100)))
        d = Fraction(int(rng.integers(-1000, 1001)), int(rng.integers(1, 100)))
        if c or d:
            return c, d


PENCIL_SAMPLES = 50


def _gen_lemma_i(rng, k):
    if rng.random() < 0.5:
        f, g = gen.gen_interlacing_pair(k, _sub_seed(rng), shared=rng.random() < 0.3)
        return {"mode": "interlacing", "f": f, "g": g, "pencil_seed": int(rng.integers(0, 2**31))}
    p = gen.gen_same_sign(max(k, 2), _sign(rng), 8, _sub_seed(rng))
    return {"mode": "dilated", "f": p, "u": _unit(rng, 4, 64), "pencil_seed": 0}


def _check_lemma_i(inp, tol):
    f = inp["f"]
    if inp["mode"] == "interlacing":
        g = inp["g"]
        verdict = interlace(f, g)
        if not verdict.interlacing:
            return TrialOutcome(False, {"verdict": verdict.kind.value})
        rng = np.random.default_rng(int(inp["pencil_seed"]))
        for _ in range(PENCIL_SAMPLES):
            c, d = _random_pencil(rng)
            h = add_scaled(f, g, c, d)
            if not h.is_zero and not is_hyperbolic(h):
                return TrialOutcome(False, {"verdict": verdict.kind.value, "c": str(c), "d": str(d)})
        return TrialOutcome(True, {"verdict": verdict.kind.value})
    # dilation beyond the logarithmic mesh breaks interlacing
    enc = lmesh_enclosure(f, tol)
    lam = enc.hi * (1 + inp["u"])
    g = dilate(f, lam)
    verdict = interlace(f, g)
    witness = find_nonhyperbolic_pencil(f, g)
    obs = {"lambda": str(lam), "verdict": verdict.kind.value}
    if witness is None:
        return TrialOutcome(False, {**obs, "witness": None})
    c, d = witness
    obs["witness"] = [str(c), str(d)]
    ok = verdict.kind is InterlaceKind.NOT and not is_hyperbolic(add_scaled(f, g, c, d))
    return TrialOutcome(ok, obs)


def _gen_lemma_ii(rng, k):
    return {
        "P": gen.gen_hyperbolic(k, 10, _sub_seed(rng)),
        "Q": gen.gen_same_sign(k, _sign(rng), 8, _sub_seed(rng)),
    }


def _check_lemma_ii(inp, tol):
    P, Q = inp["P"], inp["Q"]
    S = schur_szego(P, Q, P.formal_degree)
    return TrialOutcome(is_hyperbolic(S), {"PQ": format_poly(S)})


def _gen_lemma_iii(rng, k):
    P = gen.gen_same_sign(k, _sign(rng), 8, _sub_seed(rng))
    if rng.random() < 0.5:
        # Schur-Szego products have irrational roots: exercises inexact enclosures
        Q = gen.gen_same_sign(k, _sign(rng), 8, _sub_seed(rng))
        P = schur_szego(P, Q, k)
    return {"p": P, "u_below": _unit(rng), "u_above": _unit(rng, 1, 64)}


def _check_lemma_iii(inp, tol):
    p = inp["p"]
    enc = lmesh_enclosure(p, tol)
    obs = {"lmesh_p": _enc(enc)}
    ok = True
    if enc.lo > 1:
        below = 1 + (enc.lo - 1) * inp["u_below"]
        v = interlace(p, dilate(p, below)).kind
        obs.update(lambda_below=str(below), verdict_below=v.value)
        ok &= v is InterlaceKind.STRICT
    above = enc.hi * (1 + inp["u_above"])
    v = interlace(p, dilate(p, above)).kind
    obs.update(lambda_above=str(above), verdict_above=v.value)
    ok &= v is InterlaceKind.NOT
    return TrialOutcome(bool(ok), obs)


def _gen_leibniz(rng, k):
    j = int(rng.integers(0, k + 1))
    return {"p": gen.gen_poly(k, _sub_seed(rng)), "q": gen.gen_poly(j, _sub_seed(rng))}


def _check_leibniz(inp, tol):
    p, q = inp["p"], inp["q"]
    lhs = derivative(multiply(p, q))
    rhs = add_scaled(multiply(derivative(p), q), multiply(p, derivative(q)), 1, 1)
    return TrialOutcome(lhs == rhs, {} if lhs == rhs else {"lhs": format_poly(lhs), "rhs": format_poly(rhs)})


def _gen_theta_rep(rng, k):
    return {
        "P": gen.gen_poly(k, _sub_seed(rng)),
        "Q": gen.gen_poly(k, _sub_seed(rng)),
        "a": Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 9))),
        "a_pos": Fraction(int(rng.integers(1, 41)), int(rng.integers(1, 9))),
    }


def _check_theta_rep(inp, tol):
    P, Q, a, ap = inp["P"], inp["Q"], inp["a"], inp["a_pos"]
    k = P.formal_degree
    product_rule = schur_szego(theta_op(1, a, P), Q, k) == theta_op(1, a, schur_szego(P, Q, k))
    representation = schur_szego(theta_rep_poly(ap, k), Q, k) == theta_op(1, ap, Q)
    return TrialOutcome(
        product_rule and representation,
        {"product_rule": product_rule, "representation": representation},
    )


def _gen_cor_inf(rng, k):
    return {
        "A": gen.gen_finite_ms(k, 8, _sub_seed(rng)),
        "B": gen.gen_finite_ms(k, 8, _sub_seed(rng)),
    }


def _check_cor_inf(inp, tol):
    A, B = inp["A"], inp["B"]
    K = len(A) - 1
    AB = [a * b for a, b in zip(A, B)]
    obs: dict = {}
    ok_ab, sym_ab = is_finite_ms(AB)
    semigroup = sym_ab == schur_szego(symbol_poly(A), symbol_poly(B), K)
    obs.update(product_is_ms=ok_ab, symbol_matches=semigroup)
    ok = ok_ab and semigroup
    per_k = []
    for k in range(2, K + 1):
        trunc = [is_finite_ms(s[: k + 1]) for s in (A, B, AB)]
        if not all(t[0] for t in trunc):
            per_k.append({"k": k, "truncation_is_ms": False})
            ok = False
            continue
        QA, QB, QAB = (t[1] for t in trunc)
        encs = [lmesh_enclosure(QA, tol), lmesh_enclosure(QB, tol)]
        holds, o = _lmesh_dominates(QAB, encs)
        o.pop("vacuous", None)
        per_k.append({"k": k, "holds": holds, **o})
        ok &= holds
    obs["truncations"] = per_k
    return TrialOutcome(bool(ok), obs)


def _gen_polya(rng, k):
    return {"alphas": gen.gen_ms_prefix(k, _sub_seed(rng))}


def _check_polya(inp, tol):
    alphas = inp["alphas"]
    ok, first = polya_schur_partial_check(alphas, len(alphas) - 1)
    return TrialOutcome(ok, {"first_failure": first})


@dataclass(frozen=True)
class Campaign:
    generate: Callable
    check: Callable
    note: str = ""


CAMPAIGNS: dict[TheoremId, Campaign] = {
    TheoremId.RIESZ: Campaign(_gen_riesz, _check_riesz, "M(p - lambda p') >= M(p)"),
    TheoremId.CONST_COEFF_MESH: Campaign(
        _gen_const, _check_const, "real-rooted symbol of order <= 3 does not decrease mesh"
    ),
    TheoremId.SCHUR_SZEGO_LMESH: Campaign(
        _gen_schur, _check_schur, "lmesh(P*Q) >= max(lmesh P, lmesh Q)"
    ),
    TheoremId.THETA_LMESH: Campaign(_gen_theta, _check_theta, "lmesh(lambda p + x p') >= lmesh(p)"),
    TheoremId.LEMMA_I: Campaign(
        _gen_lemma_i, _check_lemma_i, "pencil real-rooted iff interlacing (both directions sampled)"
    ),
    TheoremId.LEMMA_II: Campaign(
        _gen_lemma_ii, _check_lemma_ii, "real-rooted * same-sign-rooted is real-rooted"
    ),
    TheoremId.LEMMA_III: Campaign(
        _gen_lemma_iii, _check_lemma_iii, "p(x), p(lambda x) interlace iff lambda < lmesh(p)"
    ),
    TheoremId.IDENTITY_LEIBNIZ: Campaign(_gen_leibniz, _check_leibniz, "(pq)' = p'q + pq'"),
    TheoremId.IDENTITY_THETA_REP: Campaign(
        _gen_theta_rep,
        _check_theta_rep,
        "(P + axP')*Q = (P*Q) + ax(P*Q)' and Q + axQ' = ((x+1)^(k-1)((1+ak)x+1))*Q",
    ),
    TheoremId.COR_INF: Campaign(
        _gen_cor_inf,
        _check_cor_inf,
        "lmesh of a truncation A_k is taken as lmesh of its symbol Q_{A_k}",
    ),
    TheoremId.POLYA_SCHUR_IV: Campaign(
        _gen_polya, _check_polya, "bounded-k check of T[(1+x)^k]; necessary condition only"
    ),
}


# ---------------------------------------------------------------- runner


def trial_inputs(theorem_id: TheoremId, seed: int, degree_min: int, degree_max: int) -> dict:
    rng = gen.rng_for(seed)
    degree = int(rng.integers(degree_min, degree_max + 1))
    return CAMPAIGNS[TheoremId(theorem_id)].generate(rng, degree)


def run_check(theorem_id: TheoremId, inputs: dict, tol: Fraction) -> TrialOutcome:
    try:
        return CAMPAIGNS[TheoremId(theorem_id)].check(inputs, tol)
    except HypmeshError as exc:
        return TrialOutcome(False, {"error": f"{type(exc).__name__}: {exc}"})


def _run_one(args) -> tuple[int, int, dict, TrialOutcome]:
    theorem_id, index, master, dmin, dmax, tol = args
    seed = gen.trial_seed(master, index)
    inputs = trial_inputs(theorem_id, seed, dmin, dmax)
    return index, seed, {k: _s(v) for k, v in inputs.items()}, run_check(theorem_id, inputs, tol)


def run_campaign(config: TrialConfig, jobs: int = 1) -> TrialReport:
    """Run ``config.trials`` independent trials and collect every violation."""
    config.validate()
    tid = TheoremId(config.theorem_id)
    args = [
        (tid, i, config.seed, config.degree_min, config.degree_max, config.tol)
        for i in range(config.trials)
    ]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        results = [_run_one(a) for a in args]
    results.sort(key=lambda r: r[0])
    failures = []
    passed = vacuous = 0
    for index, seed, inputs, outcome in results:
        if outcome.ok:
            passed += 1
            vacuous += outcome.vacuous
        else:
            failures.append(
                {
                    "theorem_id": tid.value,
                    "trial": index,
                    "trial_seed": seed,
                    "inputs": inputs,
                    "observed": outcome.observed,
                }
            )
    return TrialReport(
        config=config.echo(),
        passed=passed,
        failed=len(failures),
        failures=failures,
        wall_time=time.perf_counter() - start,
        vacuous=vacuous,
        notes=[CAMPAIGNS[tid].note] if CAMPAIGNS[tid].note else [],
    )


def replay(record: dict, tol=DEFAULT_TOL) -> TrialOutcome:
    """Re-run a failure record from its serialized inputs alone."""
    inputs = {k: _d(v) for k, v in record["inputs"].items()}
    return run_check(TheoremId(record["theorem_id"]), inputs, Fraction(tol))
