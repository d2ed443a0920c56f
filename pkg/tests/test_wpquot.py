from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artschreier.errors import ContextMismatch, DivisionByZero, PrecisionExhausted, ZeroCoset
from artschreier.gf2f import fq_new
from artschreier.grammar import ls_parse
from artschreier.laurent import LaurentSeries, wp_apply
from artschreier.wpquot import (
    Level,
    WpCoset,
    as_symbol,
    coset_add,
    coset_level,
    filtration_dim,
    filtration_dim_paper_eq2,
    mask_level,
    quad_char,
    reduce_mod_wp,
    vn_basis,
)
from oracles import naive_mul, random_nonzero, random_series

F2, F4, F8 = fq_new(1), fq_new(2), fq_new(3)


def series(ctx, terms, prec=64):
    return LaurentSeries.from_terms(ctx, terms, prec)


def X(ctx, e=1):
    return LaurentSeries.monomial(ctx, e)


def test_positive_part_reduces_to_zero():
    assert reduce_mod_wp(X(F2, 5)).is_zero


@pytest.mark.parametrize("c", [1, 2, 3])
def test_fold_x_minus_2(c):
    u = reduce_mod_wp(series(F4, {-2: c}))
    assert u == WpCoset.make(F4, 0, {1: F4.sqrt(c)})


@pytest.mark.parametrize("ctx", [F2, F4, F8], ids=["F2", "F4", "F8"])
def test_constants_reduce_by_trace(ctx):
    for c in range(ctx.q):
        solvable = any(naive_mul(y, y, ctx.modulus) ^ y == c for y in range(ctx.q))
        u = reduce_mod_wp(series(ctx, {0: c}))
        assert u.is_zero == solvable
        assert u.eps == (0 if solvable else 1) and not u.terms


def test_double_fold_cancels():
    # x^-4 -> x^-2 -> x^-1 and x^-2 -> x^-1 cancel in F_2
    assert reduce_mod_wp(ls_parse("x^-4 + x^-2", F2)).is_zero
    assert str(reduce_mod_wp(ls_parse("x^-4", F2))) == "x^-1"


def test_unknown_constant_term():
    with pytest.raises(PrecisionExhausted):
        reduce_mod_wp(series(F2, {-3: 1}, prec=0))


def test_coset_add_examples():
    u = WpCoset.unramified(F2)
    v = WpCoset.make(F2, 0, {1: 1})
    assert (u + v) == WpCoset.make(F2, 1, {1: 1})
    assert (v + v).is_zero
    with pytest.raises(ContextMismatch):
        coset_add(u, WpCoset.unramified(F4))


def test_reduce_commutes_with_adding_a0(rng, ctx):
    a0 = series(ctx, {0: ctx.a0})
    for _ in range(100):
        a = random_series(rng, ctx)
        assert reduce_mod_wp(a0 + a) == reduce_mod_wp(a0) + reduce_mod_wp(a)


@pytest.mark.parametrize(
    "coset, level",
    [
        (WpCoset.unramified(F4), Level("unramified")),
        (WpCoset.make(F4, 0, {3: 1, 1: 2}), Level("ramified", 3)),
        (WpCoset.make(F4, 1, {1: 1}), Level("ramified", 1)),
        (WpCoset.zero(F4), Level("zero")),
    ],
)
def test_coset_level(coset, level):
    assert coset_level(coset) == level
    assert mask_level(coset.mask, F4.f) == {"zero": -1, "unramified": 0}.get(level.kind, level.t)


def test_render_cosets():
    assert str(WpCoset.make(F4, 1, {1: 2, 3: 1})) == "x^-3 + g*x^-1 + a0"
    assert str(WpCoset.zero(F4)) == "0"


@pytest.mark.parametrize("f", [1, 2, 3])
def test_mask_round_trip(f):
    ctx = fq_new(f)
    for m in range(1 << filtration_dim(5, ctx)):
        u = WpCoset.from_mask(ctx, m)
        assert u.mask == m
        assert reduce_mod_wp(u.lift()) == u


@pytest.mark.parametrize(
    "n, f, dim", [(0, 1, 1), (0, 3, 1), (1, 1, 2), (3, 2, 5), (2, 2, 3), (7, 3, 13)]
)
def test_filtration_dim(n, f, dim):
    assert filtration_dim(n, fq_new(f)) == dim


def test_dim_agrees_with_published_form_only_for_prime_field():
    for n in range(10):
        assert filtration_dim(n, F2) == filtration_dim_paper_eq2(n)
    assert filtration_dim(3, F4) != filtration_dim_paper_eq2(3)


def test_vn_basis_examples():
    assert [str(u) for u in vn_basis(0, F4)] == ["a0"]
    assert [str(u) for u in vn_basis(1, F2)] == ["a0", "x^-1"]
    assert [str(u) for u in vn_basis(2, F4)] == ["a0", "x^-1", "g*x^-1"]
    assert vn_basis(2, F4) == vn_basis(1, F4)


@pytest.mark.parametrize("f, n", [(1, 7), (2, 5), (3, 3)])
def test_reduction_of_monomials_spans_vn(f, n):
    """Images of g^j x^-m (0 <= m <= n) span exactly V_n."""
    ctx = fq_new(f)
    masks = set()
    for m in range(n + 1):
        for j in range(f):
            masks.add(reduce_mod_wp(series(ctx, {-m: 1 << j})).mask)
    span = {0}
    for v in masks:
        span |= {s ^ v for s in span}
    assert len(span) == 2 ** filtration_dim(n, ctx)
    assert max(span).bit_length() <= filtration_dim(n, ctx)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from([1, 2, 3]))
def test_reduction_is_additive_and_idempotent(s, f):
    ctx = fq_new(f)
    rng = random.Random(s)
    a, b = random_series(rng, ctx), random_series(rng, ctx)
    ra = reduce_mod_wp(a)
    assert reduce_mod_wp(a + b) == ra + reduce_mod_wp(b)
    assert reduce_mod_wp(ra.lift()) == ra


def test_witness_certifies_membership(rng, ctx):
    for _ in range(100):
        a = random_series(rng, ctx)
        red = reduce_mod_wp(a, witness=True)
        assert wp_apply(red.witness) == a + red.coset.lift(a.prec)


# --- the symbol --------------------------------------------------------------


def test_symbol_examples():
    a0 = WpCoset.unramified(F2)
    assert as_symbol(a0, X(F2)) == 1
    assert as_symbol(WpCoset.zero(F2), X(F2)) == 0
    assert as_symbol(WpCoset.make(F2, 0, {1: 1}), ls_parse("1 + x", F2)) == 1
    assert as_symbol(ls_parse("x^2 + x", F2), X(F2)) == 0
    with pytest.raises(DivisionByZero):
        as_symbol(a0, LaurentSeries.zero(F2))


def test_symbol_of_raw_series_matches_its_coset(rng, ctx):
    for _ in range(50):
        a = random_series(rng, ctx)
        b = random_nonzero(rng, ctx)
        assert as_symbol(a, b) == as_symbol(reduce_mod_wp(a), b)


def test_unramified_character(ctx):
    chi = quad_char(WpCoset.unramified(ctx))
    assert chi(X(ctx)) == -1
    assert chi(X(ctx, 2)) == 1
    with pytest.raises(ZeroCoset):
        quad_char(WpCoset.zero(ctx))


def test_character_is_multiplicative(rng, ctx):
    for _ in range(100):
        a = WpCoset.from_mask(ctx, rng.randrange(1, 1 << filtration_dim(7, ctx)))
        chi = quad_char(a)
        b1, b2 = random_nonzero(rng, ctx), random_nonzero(rng, ctx)
        assert chi(b1 * b2) == chi(b1) * chi(b2)


@pytest.mark.parametrize("f", [1, 2])
def test_nondegenerate_on_v5(f):
    ctx = fq_new(f)
    tests = [X(ctx)]
    for m in range(1, 7):
        for c in range(1, ctx.q):
            tests.append(series(ctx, {0: 1, m: c}))
    for mask in range(1, 1 << filtration_dim(5, ctx)):
        u = WpCoset.from_mask(ctx, mask)
        assert any(as_symbol(u, b) for b in tests), str(u)


def test_symbol_truncation_matches_full_precision():
    # b only matters to a bounded relative precision
    a = WpCoset.make(F4, 1, {5: 3, 1: 2})
    b = ls_parse("g*x^2 + x^3 + (g+1)*x^9 + x^30", F4)
    full = series(F4, b.terms(), prec=200)
    assert as_symbol(a, b) == as_symbol(a, full)


def test_exhaustive_pairing_matrix_f1_level3():
    """The pairing V_3 x {x, 1+x, 1+x^3} is perfect for q = 2."""
    basis = vn_basis(3, F2)
    tests = [X(F2), ls_parse("1+x", F2), ls_parse("1+x^3", F2)]
    rows = [tuple(as_symbol(u, b) for b in tests) for u in basis]
    assert len(set(rows)) == 3
    for r in itertools.product((0, 1), repeat=3):
        if any(r):
            combo = WpCoset.zero(F2)
            for bit, u in zip(r, basis):
                if bit:
                    combo = combo + u
            assert any(as_symbol(combo, b) for b in tests)
