"""Exact tools for real-rooted polynomials, mesh, logarithmic mesh and
hyperbolicity-preserving operators."""

from .errors import *  # noqa: F401,F403
from .mesh import (
    InterlaceKind,
    InterlacingVerdict,
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
from .poly import (
    Poly,
    add_scaled,
    derivative,
    dilate,
    evaluate,
    multiply,
    poly_gcd,
    shift,
    square_free_decompose,
    square_free_part,
)
from .preservers import (
    DiffOpConst,
    FiniteMultiplierSeq,
    apply_diagonal,
    apply_diff_op,
    find_nonhyperbolic_pencil,
    is_finite_ms,
    is_hpo,
    polya_schur_partial_check,
    schur_szego,
    sequence_lmesh_upto,
    symbol_poly,
    theta_op,
    theta_rep_poly,
)
from .roots import (
    IsolatingInterval,
    RootProfile,
    SignClass,
    SturmChain,
    is_hyperbolic,
    isolate_roots,
    root_sign_class,
    sturm_chain,
    sturm_count,
)

__version__ = "0.1.0"
