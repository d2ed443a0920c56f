"""Truncated Laurent series over F_q: the model of K = F_q((x)).

A series carries an absolute precision ``prec``: coefficients at exponents
``>= prec`` are unknown.  Precision propagates pessimistically.  The zero
series is distinguished by ``val is None``; it still knows its precision
(``0 + O(x^prec)``).

Equality compares known coefficients on the common window, the usual
convention for lazy local-field elements, so series are unhashable.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ContextMismatch, DivisionByZero, DomainError, PrecisionExhausted
from .gf2f import FieldCtx, FqElem

DEFAULT_PREC = 64


class LaurentSeries:
    __slots__ = ("ctx", "val", "coeffs", "prec")

    def __init__(self, ctx: FieldCtx, val: int | None, coeffs: Iterable[int], prec: int) -> None:
        # Callers go through _make, which normalizes; this only stores.
        self.ctx = ctx
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # -- construction ---------------------------------------------------
    @classmethod
    def _make(cls, ctx: FieldCtx, start: int, dense: list[int], prec: int) -> LaurentSeries:
        """Normalize a dense window beginning at exponent ``start``."""
        n = min(len(dense), prec - start) if prec > start else 0
        lo = 0
        while lo < n and dense[lo] == 0:
            lo += 1
        if lo == n:
            return cls(ctx, None, (), prec)
        hi = n
        while dense[hi - 1] == 0:
            hi -= 1
        return cls(ctx, start + lo, dense[lo:hi], prec)

    @classmethod
    def zero(cls, ctx: FieldCtx, prec: int = DEFAULT_PREC) -> LaurentSeries:
        return cls(ctx, None, (), prec)

    @classmethod
    def from_terms(
        cls, ctx: FieldCtx, terms: Mapping[int, int], prec: int = DEFAULT_PREC
    ) -> LaurentSeries:
        """Series from ``{exponent: coefficient bits}``; exponents >= prec are dropped."""
        terms = {e: c for e, c in terms.items() if c and e < prec}
        if not terms:
            return cls.zero(ctx, prec)
        lo, hi = min(terms), max(terms)
        dense = [0] * (hi - lo + 1)
        for e, c in terms.items():
            dense[e - lo] = c
        return cls._make(ctx, lo, dense, prec)

    @classmethod
    def monomial(cls, ctx: FieldCtx, exponent: int, coeff: int = 1, prec: int = DEFAULT_PREC) -> LaurentSeries:
        return cls.from_terms(ctx, {exponent: coeff}, max(prec, exponent + 1))

    @classmethod
    def one(cls, ctx: FieldCtx, prec: int = DEFAULT_PREC) -> LaurentSeries:
        return cls.monomial(ctx, 0, 1, prec)

    # -- inspection -----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.val is None

    def _lo(self) -> int:
        """Valuation, or the precision for a zero series (all we know is O(x^prec))."""
        return self.prec if self.val is None else self.val

    def __getitem__(self, n: int) -> int:
        """Coefficient bits at exponent n."""
        if n >= self.prec:
            raise PrecisionExhausted(f"coefficient of x^{n} unknown (precision {self.prec})")
        if self.val is None or n < self.val or n >= self.val + len(self.coeffs):
            return 0
        return self.coeffs[n - self.val]

    def coefficient(self, n: int) -> FqElem:
        return FqElem(self.ctx, self[n])

    def terms(self) -> dict[int, int]:
        if self.val is None:
            return {}
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def dense(self, start: int, stop: int) -> list[int]:
        """Coefficients for exponents start..stop-1 (all must be known)."""
        if stop > self.prec:
            raise PrecisionExhausted(f"window up to x^{stop - 1} exceeds precision {self.prec}")
        out = [0] * max(0, stop - start)
        for e, c in self.terms().items():
            if start <= e < stop:
                out[e - start] = c
        return out

    def truncate(self, prec: int) -> LaurentSeries:
        """Forget coefficients at exponents >= prec."""
        if prec >= self.prec:
            return self
        if self.val is None:
            return LaurentSeries(self.ctx, None, (), prec)
        return LaurentSeries._make(self.ctx, self.val, list(self.coeffs), prec)

    def principal_part(self) -> dict[int, int]:
        """Terms at negative exponents; all of them must be known."""
        if self.prec <= 0:
            raise PrecisionExhausted("principal part not fully known")
        return {e: c for e, c in self.terms().items() if e < 0}

    def _check(self, other: LaurentSeries) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        p = min(self.prec, other.prec)
        a, b = self.terms(), other.terms()
        return {e: c for e, c in a.items() if e < p} == {e: c for e, c in b.items() if e < p}

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        from .grammar import ls_render

        return f"LaurentSeries({ls_render(self)!r}, prec={self.prec})"

    def __str__(self) -> str:
        from .grammar import ls_render

        return ls_render(self)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        self._check(other)
        prec = min(self.prec, other.prec)
        a, b = self.terms(), other.terms()
        out = {e: c for e, c in a.items() if e < prec}
        for e, c in b.items():
            if e < prec:
                out[e] = out.get(e, 0) ^ c
        return LaurentSeries.from_terms(self.ctx, out, prec)

    __sub__ = __add__

    def __neg__(self) -> LaurentSeries:
        return self

    def __mul__(self, other: LaurentSeries) -> LaurentSeries:
        self._check(other)
        prec = min(self.prec + other._lo(), other.prec + self._lo())
        if self.val is None or other.val is None:
            return LaurentSeries.zero(self.ctx, prec)
        start = self.val + other.val
        n = prec - start
        A, B = self.coeffs, other.coeffs
        exp, log = self.ctx._tables
        out = [0] * n
        for i in range(min(len(A), n)):
            ai = A[i]
            if not ai:
                continue
            li = log[ai]
            for j in range(min(len(B), n - i)):
                bj = B[j]
                if bj:
                    out[i + j] ^= exp[li + log[bj]]
        return LaurentSeries._make(self.ctx, start, out, prec)

    def scale(self, c: int) -> LaurentSeries:
        """Multiply by a constant of F_q (exact, precision unchanged)."""
        if c == 0:
            return LaurentSeries.zero(self.ctx, self.prec)
        mul = self.ctx.mul
        return LaurentSeries.from_terms(self.ctx, {e: mul(c, v) for e, v in self.terms().items()}, self.prec)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by x^k (exact)."""
        if self.val is None:
            return LaurentSeries.zero(self.ctx, self.prec + k)
        return LaurentSeries(self.ctx, self.val + k, self.coeffs, self.prec + k)

    def inverse(self) -> LaurentSeries:
        if self.val is None:
            raise DivisionByZero("inverse of the zero series")
        v, u = self.val, self.coeffs
        r = self.prec - v  # relative precision of the unit part
        ctx = self.ctx
        exp, log = ctx._tables
        inv0 = ctx.inv(u[0])
        linv0 = log[inv0]
        w = [0] * r
        w[0] = inv0
        for n in range(1, r):
            acc = 0
            for k in range(1, min(n, len(u) - 1) + 1):
                uk, wk = u[k], w[n - k]
                if uk and wk:
                    acc ^= exp[log[uk] + log[wk]]
            w[n] = exp[log[acc] + linv0] if acc else 0
        return LaurentSeries._make(ctx, -v, w, -v + r)

    def __truediv__(self, other: LaurentSeries) -> LaurentSeries:
        return self * other.inverse()

    def square(self) -> LaurentSeries:
        """Frobenius; in characteristic 2 the unknown tail squares too, so precision doubles."""
        sq = self.ctx.square
        return LaurentSeries.from_terms(
            self.ctx, {2 * e: sq(c) for e, c in self.terms().items()}, 2 * self.prec
        )

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries.one(self.ctx, max(self.prec, 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> LaurentSeries:
        return LaurentSeries.from_terms(
            self.ctx, {e - 1: c for e, c in self.terms().items() if e % 2}, self.prec - 1
        )

    def residue(self) -> FqElem:
        return self.coefficient(-1)


def ls_arith(op: str, a: LaurentSeries, b: LaurentSeries | None = None) -> LaurentSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


def ls_derivative(a: LaurentSeries) -> LaurentSeries:
    return a.derivative()


def ls_residue(a: LaurentSeries) -> FqElem:
    return a.residue()


def wp_apply(x: LaurentSeries) -> LaurentSeries:
    """The Artin-Schreier map x -> x^2 + x."""
    return x.square() + x


def wp_solve(y: LaurentSeries) -> LaurentSeries:
    """The unique x in the maximal ideal with x^2 + x = y, for val(y) >= 1.

    Fixed-point iteration x <- y + x^2; each pass at least doubles the
    valuation of the error, so it settles after about log2(prec) passes.
    """
    if y.val is not None and y.val <= 0:
        raise DomainError(f"wp_solve needs val(y) >= 1, got {y.val}")
    if y.val is None:
        return y
    x = y
    while True:
        nxt = y + x.square()
        if nxt.terms() == x.terms():
            return nxt
        x = nxt
