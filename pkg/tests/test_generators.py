from fractions import Fraction as F

import pytest

from hypmesh import generators as gen
from hypmesh.mesh import InterlaceKind, interlace, lmesh_enclosure
from hypmesh.preservers import is_finite_ms, polya_schur_partial_check
from hypmesh.roots import SignClass, is_hyperbolic, isolate_roots, root_sign_class


def test_trial_seed_is_stable_and_distinct():
    seeds = [gen.trial_seed(2026, i) for i in range(1000)]
    assert seeds == [gen.trial_seed(2026, i) for i in range(1000)]
    assert len(set(seeds)) == 1000
    assert gen.trial_seed(1, 0) != gen.trial_seed(2, 0)


@pytest.mark.parametrize("seed", range(5))
def test_generators_are_deterministic(seed):
    assert gen.gen_same_sign(5, "neg", 4, seed) == gen.gen_same_sign(5, "neg", 4, seed)
    assert gen.gen_hyperbolic(6, 10, seed) == gen.gen_hyperbolic(6, 10, seed)
    assert gen.gen_finite_ms(4, 8, seed) == gen.gen_finite_ms(4, 8, seed)
    assert gen.gen_ms_prefix(6, seed) == gen.gen_ms_prefix(6, seed)
    assert gen.gen_interlacing_pair(4, seed) == gen.gen_interlacing_pair(4, seed)


def test_same_sign_hypotheses():
    for seed in range(60):
        for sign, cls in (("neg", SignClass.ALL_NEGATIVE), ("pos", SignClass.ALL_POSITIVE)):
            p = gen.gen_same_sign(1 + seed % 7, sign, 4, seed)
            assert p.degree == 1 + seed % 7
            assert is_hyperbolic(p) and root_sign_class(p) == cls
            if p.degree >= 2:
                e = lmesh_enclosure(p)
                assert F(17, 16) <= e.lo and e.hi <= 4


def test_hyperbolic_hypotheses():
    for seed in range(60):
        p = gen.gen_hyperbolic(1 + seed % 8, 5, seed)
        assert p.degree == 1 + seed % 8 and is_hyperbolic(p)
        assert all(-5 <= iv.hi and iv.lo <= 5 for iv in isolate_roots(p, F(1, 64)).intervals)


def test_finite_ms_and_prefix_hypotheses():
    for seed in range(40):
        assert is_finite_ms(gen.gen_finite_ms(1 + seed % 6, 8, seed))[0]
        assert polya_schur_partial_check(gen.gen_ms_prefix(7, seed), 7)[0]


def test_interlacing_pairs():
    for seed in range(40):
        f, g = gen.gen_interlacing_pair(1 + seed % 5, seed)
        assert interlace(f, g).kind == InterlaceKind.STRICT
        f, g = gen.gen_interlacing_pair(1 + seed % 5, seed, shared=True)
        assert interlace(f, g).interlacing


def test_argument_checks():
    with pytest.raises(ValueError):
        gen.gen_same_sign(0, "neg", 4, 0)
    with pytest.raises(ValueError):
        gen.gen_same_sign(3, "neg", 1, 0)
    with pytest.raises(ValueError):
        gen.gen_same_sign(3, "both", 4, 0)
