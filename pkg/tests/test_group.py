import itertools
import random

import pytest

from artifact import _pykernels
from artifact.group import NO, UNDECIDED, YES, GroupContext, context, max_piece_length
from artifact.kernels import BACKEND
from artifact.words import abelianize, format_word, inverse, mul, parse_word


@pytest.fixture(scope="module")
def ctx():
    return context(4)


def test_free_reduce_examples(ctx):
    assert ctx.free_reduce((1, -1, 2)) == (2,)
    assert ctx.free_reduce(()) == ()
    assert ctx.free_reduce((1, 2, -2, 1)) == (1, 1)


def test_free_reduce_rejects_bad_index(ctx):
    with pytest.raises(ValueError):
        ctx.free_reduce((5,))
    with pytest.raises(ValueError):
        ctx.free_reduce((0,))


def test_dehn_reduce_examples(ctx):
    assert ctx.dehn_reduce((1, 1, 2, 2, 3, 3, 4, 4)) == ()
    assert ctx.dehn_reduce((1, 1, 2, 2, 3, 3, 4)) == (-4,)
    assert ctx.dehn_reduce((1,)) == (1,)
    # both sides of the reduction agree with the independent oracle
    assert ctx.triviality_oracle(mul(ctx.dehn_reduce((1, 1, 2, 2, 3, 3, 4)), (4,))) == "trivial"
    assert ctx.triviality_oracle((1, 1, 2, 2, 3, 3, 4, 4)) == "trivial"


def test_is_identity_examples(ctx):
    assert ctx.is_identity(mul((1, 2), inverse((1, 2))))
    assert not ctx.is_identity((1,))
    rel = ctx.relator
    assert ctx.is_identity((3,) + rel + (-3,))


def test_dehn_idempotent_and_homology_compatible(ctx):
    rng = random.Random(5)
    for _ in range(2000):
        w = tuple(rng.choice((1, -1)) * rng.randint(1, 4) for _ in range(rng.randint(0, 14)))
        r = ctx.dehn_reduce(w)
        assert ctx.dehn_reduce(r) == r
        if not r:
            assert ctx.homology_class(w) == (0, 0, 0, 0)
        assert ctx.homology_class(w) == ctx.homology_class(r)


def test_backends_agree():
    rng = random.Random(9)
    from artifact import kernels
    for g in (4, 5, 7):
        for _ in range(500):
            w = tuple(rng.choice((1, -1)) * rng.randint(1, g) for _ in range(rng.randint(0, 30)))
            assert tuple(kernels.dehn_reduce(w, g)) == tuple(_pykernels.dehn_reduce(w, g))
            assert tuple(kernels.free_reduce(w)) == tuple(_pykernels.free_reduce(w))
    assert BACKEND in ("cython", "python")


@pytest.mark.parametrize("g", range(4, 13))
def test_piece_condition(g):
    assert max_piece_length(g) == 1
    assert 6 * max_piece_length(g) < 2 * g


@pytest.mark.parametrize("g", [1, 2, 3])
def test_small_genus_rejected(g):
    with pytest.raises(ValueError):
        GroupContext(g)


def test_conjugacy_examples(ctx):
    r = ctx.are_conjugate((1, 2), (2, 1))
    # witnesses form a coset of the centralizer <a1 a2>; a1^-1 and a2 both qualify
    assert r.status == YES and r.witness in ((-1,), (2,))
    assert ctx.is_identity(mul(r.witness, (1, 2), inverse(r.witness), (-1, -2)))
    assert ctx.are_conjugate((1,), (2,)).status == NO
    r = ctx.are_conjugate((1,), (-3, 1, 3))
    assert r.status == YES and r.witness == (-3,)


def test_conjugacy_witnesses_verify(ctx):
    rng = random.Random(3)
    for _ in range(200):
        u = tuple(rng.choice((1, -1)) * rng.randint(1, 4) for _ in range(rng.randint(1, 6)))
        c = tuple(rng.choice((1, -1)) * rng.randint(1, 4) for _ in range(rng.randint(0, 5)))
        v = mul(c, u, inverse(c))
        r = ctx.are_conjugate(u, v)
        assert r.status == YES
        w = r.witness
        assert ctx.is_identity(mul(w, u, inverse(w), inverse(v)))


def test_conjugacy_budget_zero_undecided(ctx):
    assert ctx.are_conjugate((1, 2), (2, 1), budget=0).status == UNDECIDED


def test_inner_witness_examples(ctx):
    ident = tuple((i,) for i in range(1, 5))
    r = ctx.inner_witness(ident)
    assert r.status == YES and r.witness == ()
    w = (1, 2)
    imgs = tuple(ctx.dehn_reduce(mul(w, (i,), inverse(w))) for i in range(1, 5))
    r = ctx.inner_witness(imgs)
    assert r.status == YES and r.witness == (1, 2)


def test_inner_witness_rejects_malformed(ctx):
    with pytest.raises(ValueError):
        ctx.inner_witness(((1,), (2,), (3,), (1, 4)))


def test_triviality_oracle_examples(ctx):
    assert ctx.triviality_oracle(ctx.relator, radius=10) == "trivial"
    assert ctx.triviality_oracle((1, 2)) == "nontrivial"
    assert ctx.triviality_oracle((1, 2, -1, -2), radius=6) in ("unknown", "nontrivial")


def test_word_text_roundtrip():
    w = parse_word("a1 A2 a3")
    assert w == (1, -2, 3)
    assert format_word(w) == "a1 A2 a3"
    assert format_word(()) == "1"
    assert tuple(abelianize((1, 2, 2, 3), 4)) == (1, 2, 1, 0)


def test_pure_backend_selected_by_env():
    import os
    import subprocess
    import sys
    code = ("from artifact.kernels import BACKEND, dehn_reduce; "
            "print(BACKEND, dehn_reduce((1, 1, 2, 2, 3, 3, 4, 4), 4))")
    env = dict(os.environ, ARTIFACT_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split(maxsplit=1)
    assert out[0] == "python"
    assert out[1].strip() == "()"
