"""The F_2-space K/wp(K): canonical cosets, the filtration V_n, the symbol [a, b).

Every class a + wp(K) has a unique representative

    eps * a0 + sum_{n odd > 0} c_n x^{-n},      eps in F_2, c_n in F_q,

with a0 the smallest trace-one constant.  In the fixed ordered F_2-basis

    a0, x^-1, g x^-1, ..., g^{f-1} x^-1, x^-3, g x^-3, ...

a coset is a bitmask (``WpCoset.mask``); bit 0 is a0 and the f bits for
x^{-n} start at ``1 + f*(n-1)/2``.  The basis of V_n is a prefix of this
list, so masks are stable across filtration levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Callable, Mapping

from .errors import ContextMismatch, DivisionByZero, PrecisionExhausted, ZeroCoset
from .gf2f import FieldCtx, FqElem
from .grammar import render_term
from .laurent import DEFAULT_PREC, LaurentSeries, wp_solve


@total_ordering
@dataclass(frozen=True)
class WpCoset:
    ctx: FieldCtx
    eps: int
    # sorted (n, coefficient bits) with n odd and positive, coefficient nonzero
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")
        for n, c in self.terms:
            if n <= 0 or n % 2 == 0 or c == 0:
                raise ValueError(f"invalid canonical term ({n}, {c})")

    @classmethod
    def make(cls, ctx: FieldCtx, eps: int, pp: Mapping[int, int]) -> WpCoset:
        return cls(ctx, eps & 1, tuple(sorted((n, c) for n, c in pp.items() if c)))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> WpCoset:
        return cls(ctx, 0)

    @classmethod
    def unramified(cls, ctx: FieldCtx) -> WpCoset:
        return cls(ctx, 1)

    @classmethod
    def from_mask(cls, ctx: FieldCtx, mask: int) -> WpCoset:
        f = ctx.f
        eps = mask & 1
        mask >>= 1
        pp = {}
        n = 1
        full = (1 << f) - 1
        while mask:
            if mask & full:
                pp[n] = mask & full
            mask >>= f
            n += 2
        return cls.make(ctx, eps, pp)

    @property
    def pp(self) -> dict[int, FqElem]:
        return {n: FqElem(self.ctx, c) for n, c in self.terms}

    @property
    def mask(self) -> int:
        f = self.ctx.f
        m = self.eps
        for n, c in self.terms:
            m |= c << (1 + f * (n - 1) // 2)
        return m

    @property
    def is_zero(self) -> bool:
        return self.eps == 0 and not self.terms

    def __add__(self, other: WpCoset) -> WpCoset:
        return coset_add(self, other)

    def __lt__(self, other: WpCoset) -> bool:
        return self.mask < other.mask

    def lift(self, prec: int = DEFAULT_PREC) -> LaurentSeries:
        t = {-n: c for n, c in self.terms}
        if self.eps:
            t[0] = self.ctx.a0
        return LaurentSeries.from_terms(self.ctx, t, prec)

    def __str__(self) -> str:
        parts = [render_term(-n, c) for n, c in reversed(self.terms)]
        if self.eps:
            parts.append("a0")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"WpCoset({self})"


@dataclass(frozen=True)
class Level:
    """coset_level result: kind is 'zero', 'unramified' or 'ramified' (then t is the break)."""

    kind: str
    t: int | None = None


def coset_add(u: WpCoset, v: WpCoset) -> WpCoset:
    if u.ctx != v.ctx:
        raise ContextMismatch(f"{u.ctx!r} vs {v.ctx!r}")
    pp = dict(u.terms)
    for n, c in v.terms:
        pp[n] = pp.get(n, 0) ^ c
    return WpCoset.make(u.ctx, u.eps ^ v.eps, pp)


def coset_level(u: WpCoset) -> Level:
    if u.terms:
        return Level("ramified", u.terms[-1][0])
    return Level("unramified") if u.eps else Level("zero")


def mask_level(mask: int, f: int) -> int:
    """Break of the coset with this mask: -1 for zero, 0 for unramified, else odd t."""
    if mask <= 1:
        return mask - 1
    return 2 * ((mask.bit_length() - 2) // f) + 1


@dataclass
class Reduction:
    coset: WpCoset
    witness: LaurentSeries  # a + lift(coset) = wp(witness), to witness precision


def reduce_mod_wp(a: LaurentSeries, witness: bool = False) -> WpCoset | Reduction:
    """Canonical representative of a + wp(K).

    The x-adic tail lies in wp(K) outright.  Even negative exponents fold
    from the bottom up: c x^{-2m} ~ sqrt(c) x^{-m}, the difference being
    wp(sqrt(c) x^{-m}).  A constant c is traded for Tr(c) a0.  With
    ``witness=True`` the element w with a + lift = wp(w) is assembled too.
    """
    ctx = a.ctx
    if a.prec <= 0:
        raise PrecisionExhausted("constant term of the input is unknown")
    pp = a.principal_part()
    c0 = a[0]
    folds: dict[int, int] = {}
    for e in range(min(pp, default=0), 0):
        c = pp.get(e, 0)
        if not c or e % 2:
            continue
        del pp[e]
        r = ctx.sqrt(c)
        pp[e // 2] = pp.get(e // 2, 0) ^ r
        if not pp[e // 2]:
            del pp[e // 2]
        folds[e // 2] = folds.get(e // 2, 0) ^ r
    eps = ctx.trace(c0)
    coset = WpCoset.make(ctx, eps, {-e: c for e, c in pp.items()})
    if not witness:
        return coset
    c_fix = c0 ^ (ctx.a0 if eps else 0)
    y0 = ctx.wp_preimage(c_fix)
    assert y0 is not None, "trace-zero constant must lie in wp(F_q)"
    folds[0] = y0
    tail = LaurentSeries.from_terms(ctx, {e: c for e, c in a.terms().items() if e > 0}, a.prec)
    w = LaurentSeries.from_terms(ctx, folds, a.prec) + wp_solve(tail)
    return Reduction(coset, w)


def filtration_dim(n: int, ctx: FieldCtx) -> int:
    """dim_F2 V_n = 1 + f * ceil(n/2)."""
    if n < 0:
        raise ValueError("filtration level must be >= 0")
    return 1 + ctx.f * ((n + 1) // 2)


def filtration_dim_paper_eq2(n: int) -> int:
    """The published closed form 1 + ceil(n/2); agrees with filtration_dim only when f = 1."""
    return 1 + (n + 1) // 2


def vn_basis(n: int, ctx: FieldCtx) -> list[WpCoset]:
    return [WpCoset.from_mask(ctx, 1 << i) for i in range(filtration_dim(n, ctx))]


def log_derivative(b: LaurentSeries) -> LaurentSeries:
    """db/b."""
    return b.derivative() / b


def as_symbol(a: WpCoset | LaurentSeries, b: LaurentSeries) -> int:
    """Artin-Schreier symbol [a, b) in F_2, via Tr(res(a * db/b)).

    ``a`` may be a coset or any series (then it need not be reduced).
    Only the coefficients of db/b up to x^{-1-val(a)} matter, so ``b`` is
    truncated to that relative precision before the division.
    """
    A = a.lift() if isinstance(a, WpCoset) else a
    if b.is_zero:
        raise DivisionByZero("symbol [a, 0) is undefined")
    if A.is_zero:
        if A.prec < 1:
            raise PrecisionExhausted("first argument unknown through the constant term")
        return 0
    # db/b has valuation >= -1; the residue needs it up to x^{-1-val(A)},
    # which needs b to relative precision 1 - val(A) beyond its valuation.
    need = max(1, 1 - A.val) + 1
    b = b.truncate(b.val + need)
    L = log_derivative(b)
    return A.ctx.trace((A * L)[-1])


def quad_char(a: WpCoset) -> Callable[[LaurentSeries], int]:
    """The quadratic character b -> (-1)^[a, b) attached to a nonzero coset."""
    if a.is_zero:
        raise ZeroCoset("the zero coset gives the trivial character")

    def chi(b: LaurentSeries) -> int:
        return -1 if as_symbol(a, b) else 1

    chi.coset = a  # type: ignore[attr-defined]
    return chi
