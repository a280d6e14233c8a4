"""Command-line interface.

Exit codes: 0 success / property holds, 1 property violated,
2 usage or parse error, 3 precondition error.

Negative rationals passed to options need the ``--opt=-1/2`` spelling.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .campaigns import TheoremId, TrialConfig, run_campaign
from .errors import ParseError, PreconditionError
from .mesh import MeshEnclosure, interlace, lmesh_enclosure, mesh_enclosure
from .notation import format_poly, parse_poly, parse_rational, parse_seq
from .poly import Poly
from .preservers import (
    DiffOpConst,
    apply_diff_op,
    is_finite_ms,
    is_hpo,
    polya_schur_partial_check,
    schur_szego,
    sequence_lmesh_upto,
    theta_op,
)

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3
DEFAULT_TOL = "1/1000000000"


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _enclosure_dict(e: MeshEnclosure) -> dict:
    return {"lo": str(e.lo), "hi": str(e.hi), "exact": e.exact, "approx": float((e.lo + e.hi) / 2)}


def _poly_dict(p: Poly) -> dict:
    return {"poly": format_poly(p), "pretty": str(p)}


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _fmt_enclosure(name: str, e: MeshEnclosure) -> str:
    if e.exact:
        return f"{name} = {e.lo} (exact)"
    return f"{name} in [{e.lo}, {e.hi}] ~ {float((e.lo + e.hi) / 2):.12g}"


def cmd_mesh(args) -> int:
    e = mesh_enclosure(parse_poly(args.poly), args.tol)
    _emit(args, _enclosure_dict(e), _fmt_enclosure("mesh", e))
    return EXIT_OK


def cmd_lmesh(args) -> int:
    e = lmesh_enclosure(parse_poly(args.poly), args.tol)
    _emit(args, _enclosure_dict(e), _fmt_enclosure("lmesh", e))
    return EXIT_OK


def cmd_interlace(args) -> int:
    v = interlace(parse_poly(args.f), parse_poly(args.g))
    _emit(
        args,
        {"kind": v.kind.value, "common_root_count": v.common_root_count},
        f"{v.kind.value} (common roots: {v.common_root_count})",
    )
    return EXIT_OK if v.interlacing else EXIT_VIOLATED


def cmd_schur_szego(args) -> int:
    P, Q = parse_poly(args.p), parse_poly(args.q)
    k = args.k
    S = schur_szego(P.with_formal_degree(k) if P.formal_degree <= k else P,
                    Q.with_formal_degree(k) if Q.formal_degree <= k else Q, k)
    _emit(args, _poly_dict(S), f"{S}\n{format_poly(S)}")
    return EXIT_OK


def cmd_check_ms(args) -> int:
    ok, Q = is_finite_ms(parse_seq(args.seq))
    _emit(
        args,
        {"multiplier_sequence": ok, "symbol": format_poly(Q)},
        f"{'finite multiplier sequence' if ok else 'NOT a finite multiplier sequence'}; Q_T = {Q}",
    )
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_check_hpo_symbol(args) -> int:
    ok = is_hpo(DiffOpConst(parse_poly(args.symbol)))
    _emit(
        args,
        {"hyperbolicity_preserver": ok},
        "symbol is real-rooted: operator preserves real-rootedness"
        if ok
        else "symbol is not real-rooted: operator does not preserve real-rootedness",
    )
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_apply_diffop(args) -> int:
    out = apply_diff_op(DiffOpConst(parse_poly(args.symbol)), parse_poly(args.poly))
    _emit(args, _poly_dict(out), f"{out}\n{format_poly(out)}")
    return EXIT_OK


def cmd_theta(args) -> int:
    out = theta_op(args.lam, args.a, parse_poly(args.poly))
    _emit(args, _poly_dict(out), f"{out}\n{format_poly(out)}")
    return EXIT_OK


def cmd_polya_schur_iv(args) -> int:
    ok, first = polya_schur_partial_check(parse_seq(args.seq), args.K)
    text = (
        f"T[(1+x)^k] real-rooted with same-sign roots for k = 0..{args.K}"
        if ok
        else f"fails at k = {first}"
    )
    _emit(args, {"holds": ok, "first_failure": first}, text)
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_seq_lmesh(args) -> int:
    e = sequence_lmesh_upto(parse_seq(args.seq), args.K, args.tol)
    _emit(args, _enclosure_dict(e), _fmt_enclosure(f"min lmesh(Q_A_k), k<={args.K}", e))
    return EXIT_OK


def cmd_verify(args) -> int:
    config = TrialConfig(
        TheoremId(args.theorem), args.trials, args.deg_min, args.deg_max, args.seed, args.tol
    )
    report = run_campaign(config, jobs=args.jobs)
    if args.json:
        print(report.to_json())
    print(
        f"{config.theorem_id.value}: passed {report.passed}/{config.trials}, "
        f"failed {report.failed} ({report.vacuous} vacuous) in {report.wall_time:.2f}s",
        file=sys.stderr,
    )
    return EXIT_VIOLATED if report.failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypmesh",
        description="Exact analysis of real-rooted polynomials and hyperbolicity preservers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, tol=False, json_default=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action=argparse.BooleanOptionalAction, default=json_default,
                       help="emit machine-readable JSON")
        if tol:
            p.add_argument("--tol", type=_rational, default=_rational(DEFAULT_TOL),
                           help="enclosure width (rational, default 1/10^9)")
        return p

    p = add("mesh", cmd_mesh, "minimal distance between roots", tol=True)
    p.add_argument("poly")
    p = add("lmesh", cmd_lmesh, "minimal ratio of consecutive root magnitudes", tol=True)
    p.add_argument("poly")
    p = add("interlace", cmd_interlace, "exact interlacing verdict")
    p.add_argument("f")
    p.add_argument("g")
    p = add("schur-szego", cmd_schur_szego, "Schur-Szego composition at formal degree k")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--k", type=int, required=True)
    p = add("check-ms", cmd_check_ms, "finite multiplier sequence test")
    p.add_argument("seq")
    p = add("check-hpo-symbol", cmd_check_hpo_symbol, "constant-coefficient operator test")
    p.add_argument("symbol")
    p = add("apply-diffop", cmd_apply_diffop, "apply sum a_i D^i given its symbol")
    p.add_argument("symbol")
    p.add_argument("poly")
    p = add("theta", cmd_theta, "lambda p + a x p'")
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("poly")
    p = add("polya-schur-iv", cmd_polya_schur_iv, "check T[(1+x)^k] for k <= K")
    p.add_argument("seq")
    p.add_argument("--K", type=int, required=True)
    p = add("seq-lmesh", cmd_seq_lmesh, "min lmesh over truncations 2..K", tol=True)
    p.add_argument("seq")
    p.add_argument("--K", type=int, required=True)
    p = add("verify", cmd_verify, "run a seeded verification campaign", tol=True, json_default=True)
    p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--deg-min", type=int, required=True)
    p.add_argument("--deg-max", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
