"""Arithmetic in the residue field F_q, q = 2^f, in a polynomial basis.

Elements are stored as ints whose bit j is the coefficient of g^j, where g
is the class of the indeterminate modulo the defining polynomial.  The hot
paths (``FieldCtx.mul`` and friends) work on raw ints; :class:`FqElem` is the
context-tagged wrapper used at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import ContextMismatch, DegreeMismatch, DivisionByZero, ReduciblePolynomial

MAX_DEGREE = 16

# Smallest irreducible polynomial of each degree, read as an integer with the
# leading coefficient in the top bit.  Degree 1 gives g itself, so F_2 = F_2[g]/(g).
DEFAULT_MODULI: dict[int, int] = {
    1: 0x2,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two F_2[g] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def is_irreducible(p: int) -> bool:
    """Exhaustive divisor check: no factor of degree 1..deg(p)//2."""
    d = poly_degree(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, q) == 0:
            return False
    return True


def smallest_irreducible(f: int) -> int:
    for p in range(1 << f, 1 << (f + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


def render_poly(bits: int) -> str:
    """Render an element as a polynomial in g, highest degree first."""
    if bits == 0:
        return "0"
    terms = []
    for j in range(bits.bit_length() - 1, -1, -1):
        if bits >> j & 1:
            terms.append("1" if j == 0 else "g" if j == 1 else f"g^{j}")
    return "+".join(terms)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldCtx:
    """The residue field F_{2^f} = F_2[g]/(modulus)."""

    f: int
    modulus: int

    def __post_init__(self) -> None:
        if not 1 <= self.f <= MAX_DEGREE:
            raise DegreeMismatch(f"f must lie in 1..{MAX_DEGREE}, got {self.f}")
        if poly_degree(self.modulus) != self.f:
            raise DegreeMismatch(
                f"modulus {render_poly(self.modulus)} has degree "
                f"{poly_degree(self.modulus)}, expected {self.f}"
            )
        if not is_irreducible(self.modulus):
            raise ReduciblePolynomial(f"{render_poly(self.modulus)} is reducible over F_2")

    @property
    def q(self) -> int:
        return 1 << self.f

    def elements(self) -> range:
        return range(self.q)

    # -- tables --------------------------------------------------------
    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        q = self.q
        order = q - 1
        factors = _prime_factors(order)
        gen = 1
        for cand in range(1, q):
            if all(self._pow_slow(cand, order // p) != 1 for p in factors):
                gen = cand
                break
        exp = [0] * (2 * order + 1)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        for i in range(order, 2 * order + 1):
            exp[i] = exp[i - order]
        return exp, log

    @cached_property
    def _square_table(self) -> list[int]:
        return [self._mul_slow(x, x) for x in range(self.q)]

    @cached_property
    def _sqrt_table(self) -> list[int]:
        out = [0] * self.q
        for x, sq in enumerate(self._square_table):
            out[sq] = x
        return out

    @cached_property
    def _trace_table(self) -> list[int]:
        out = []
        sq = self._square_table
        for x in range(self.q):
            acc, y = 0, x
            for _ in range(self.f):
                acc ^= y
                y = sq[y]
            # acc lies in F_2 = {0, 1}
            out.append(acc)
        return out

    @cached_property
    def _as_preimages(self) -> dict[int, int]:
        """Map c -> y with y^2 + y = c, for every c in the image of y -> y^2 + y."""
        out: dict[int, int] = {}
        sq = self._square_table
        for y in range(self.q):
            out.setdefault(sq[y] ^ y, y)
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def _pow_slow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            n >>= 1
        return r

    # -- raw-int arithmetic ---------------------------------------------
    def reduce(self, bits: int) -> int:
        """Reduce an arbitrary F_2[g] polynomial into the field."""
        return poly_mod(bits, self.modulus)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse in F_q")
        exp, log = self._tables
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def square(self, a: int) -> int:
        return self._square_table[a]

    def sqrt(self, a: int) -> int:
        return self._sqrt_table[a]

    def trace(self, a: int) -> int:
        return self._trace_table[a]

    def wp_preimage(self, c: int) -> int | None:
        """Some y in F_q with y^2 + y = c, or None when Tr(c) = 1."""
        return self._as_preimages.get(c)

    @cached_property
    def a0(self) -> int:
        """Smallest element of trace 1; represents the unramified class."""
        return next(x for x in range(self.q) if self.trace(x) == 1)

    def elem(self, bits: int) -> FqElem:
        return FqElem(self, self.reduce(bits))

    def all_elems(self) -> Iterator[FqElem]:
        return (FqElem(self, x) for x in range(self.q))

    def __repr__(self) -> str:
        return f"FieldCtx(f={self.f}, modulus={render_poly(self.modulus)})"


@dataclass(frozen=True)
class FqElem:
    ctx: FieldCtx
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < self.ctx.q:
            raise ValueError(f"{self.bits:#b} is not a reduced element of F_{self.ctx.q}")

    def _check(self, other: FqElem) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other: FqElem) -> FqElem:
        self._check(other)
        return FqElem(self.ctx, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: FqElem) -> FqElem:
        self._check(other)
        return FqElem(self.ctx, self.ctx.mul(self.bits, other.bits))

    def __truediv__(self, other: FqElem) -> FqElem:
        return self * other.inv()

    def __pow__(self, n: int) -> FqElem:
        if n < 0:
            return self.inv() ** (-n)
        r, a = 1, self.bits
        while n:
            if n & 1:
                r = self.ctx.mul(r, a)
            a = self.ctx.mul(a, a)
            n >>= 1
        return FqElem(self.ctx, r)

    def __bool__(self) -> bool:
        return self.bits != 0

    def inv(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.inv(self.bits))

    def trace(self) -> int:
        return self.ctx.trace(self.bits)

    def sqrt(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.sqrt(self.bits))

    def __str__(self) -> str:
        return render_poly(self.bits)


def fq_new(f: int, modulus: int | None = None) -> FieldCtx:
    """Build a residue-field context; the default modulus is the smallest irreducible."""
    if modulus is None:
        if f not in DEFAULT_MODULI:
            raise DegreeMismatch(f"f must lie in 1..{MAX_DEGREE}, got {f}")
        modulus = DEFAULT_MODULI[f]
    return FieldCtx(f, modulus)


def fq_arith(op: str, x: FqElem, y: FqElem | None = None) -> FqElem:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    raise ValueError(f"unknown op {op!r}")


def fq_trace(x: FqElem) -> int:
    return x.trace()


def fq_sqrt(x: FqElem) -> FqElem:
    return x.sqrt()
