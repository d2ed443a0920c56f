from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artschreier.errors import ContextMismatch, DivisionByZero, DomainError, PrecisionExhausted
from artschreier.gf2f import fq_new
from artschreier.laurent import LaurentSeries, ls_arith, ls_derivative, ls_residue, wp_apply, wp_solve
from oracles import d_mul, d_window, d_wp, random_series

F2, F4 = fq_new(1), fq_new(2)


def series(ctx, terms, prec=64):
    return LaurentSeries.from_terms(ctx, terms, prec)


def x(ctx=F2, e=1, prec=64):
    return LaurentSeries.monomial(ctx, e, prec=prec)


@st.composite
def laurent(draw, ctx=F4, lo=-6, hi=10, prec=40):
    terms = draw(st.dictionaries(st.integers(lo, hi), st.integers(1, ctx.q - 1), max_size=8))
    return series(ctx, terms, prec)


def test_basic_identities():
    assert x() * x(e=-1) == LaurentSeries.one(F2)
    a = series(F4, {-3: 1, -1: 2, 0: 1})
    assert (a + a).is_zero
    assert a.val == -3 and a[-1] == 2 and a[-2] == 0


def test_inverse_of_one_plus_x_is_geometric():
    b = LaurentSeries.one(F2) + x()
    inv = ls_arith("inv", b)
    assert inv.terms() == {e: 1 for e in range(inv.prec)}
    assert (b * inv) == LaurentSeries.one(F2)


def test_zero_is_distinct_and_carries_precision():
    z = LaurentSeries.zero(F2, prec=10)
    assert z.is_zero and z.val is None and z.prec == 10
    with pytest.raises(DivisionByZero):
        ls_arith("inv", z)
    with pytest.raises(PrecisionExhausted):
        _ = z[10]


def test_derivative_examples():
    assert ls_derivative(x()) == LaurentSeries.one(F2)
    assert ls_derivative(x(e=2)).is_zero
    gx = series(F4, {-1: 2})
    d = ls_derivative(gx)
    assert d.terms() == {-2: 2} and d.prec == gx.prec - 1


def test_residue_examples():
    assert ls_residue(x(e=-1)).bits == 1
    assert ls_residue(LaurentSeries.one(F2) + x()).bits == 0
    b = x()
    assert ls_residue(ls_derivative(b) / b).bits == 1
    with pytest.raises(PrecisionExhausted):
        ls_residue(series(F2, {-3: 1}, prec=-1))


def test_wp_examples():
    one = LaurentSeries.one(F2)
    assert wp_apply(LaurentSeries.zero(F2)).is_zero
    assert wp_apply(one).is_zero
    assert wp_apply(x(e=-1)).terms() == {-2: 1, -1: 1}
    # wp(sqrt(c) x^-m) = c x^-2m + sqrt(c) x^-m
    for c in range(1, 4):
        r = F4.sqrt(c)
        assert wp_apply(series(F4, {-3: r})).terms() == {-6: c, -3: r}


def test_wp_solve_of_x():
    w = wp_solve(x(prec=40))
    assert w.terms() == {1: 1, 2: 1, 4: 1, 8: 1, 16: 1, 32: 1}
    assert wp_apply(w) == x(prec=40)


def test_wp_solve_round_trip_and_domain():
    assert wp_solve(LaurentSeries.zero(F2)).is_zero
    x3 = x(e=3)
    assert wp_solve(wp_apply(x3)) == x3
    with pytest.raises(DomainError):
        wp_solve(LaurentSeries.one(F2))


def test_precision_propagation():
    a = series(F2, {-2: 1, 0: 1}, prec=10)
    b = series(F2, {3: 1}, prec=20)
    p = a * b
    # min(10 + 3, 20 - 2)
    assert p.val == 1 and p.prec == 13
    assert a.inverse().prec == 2 + (10 + 2)
    assert a.square().prec == 20


def test_contexts_do_not_mix():
    with pytest.raises(ContextMismatch):
        _ = x(F2) + x(F4)


@settings(max_examples=150, deadline=None)
@given(laurent(), laurent())
def test_product_matches_schoolbook(a, b):
    p = a * b
    if p.prec <= (p.val if p.val is not None else p.prec):
        return
    expect = d_mul(d_window(a), d_window(b), F4.modulus, p.prec)
    assert d_window(p) == expect


@settings(max_examples=150, deadline=None)
@given(laurent(), laurent())
def test_valuation_laws(a, b):
    if not a.is_zero and not b.is_zero:
        assert (a * b).val == a.val + b.val
    s = a + b
    if not a.is_zero and not b.is_zero and a.val != b.val:
        assert s.val == min(a.val, b.val)
    elif not s.is_zero and not a.is_zero and not b.is_zero:
        assert s.val >= min(a.val, b.val)


@settings(max_examples=150, deadline=None)
@given(laurent(), laurent())
def test_wp_is_additive(a, b):
    assert wp_apply(a + b) == wp_apply(a) + wp_apply(b)
    assert d_window(wp_apply(a)) == d_wp(d_window(a), F4.modulus, wp_apply(a).prec)


@settings(max_examples=100, deadline=None)
@given(laurent(lo=0, hi=8))
def test_residue_of_derivative_vanishes(a):
    assert ls_residue(ls_derivative(a)).bits == 0


@settings(max_examples=100, deadline=None)
@given(laurent())
def test_inverse_times_self_is_one(a):
    if a.is_zero:
        return
    assert a * a.inverse() == LaurentSeries.one(F4)


def test_wp_solve_random(rng: random.Random, ctx):
    for _ in range(100):
        y = random_series(rng, ctx, lo=1, hi=20, prec=64)
        if y.is_zero:
            continue
        w = wp_solve(y)
        assert w.val is not None and w.val >= 1
        assert wp_apply(w) == y
        assert w.prec >= y.prec
