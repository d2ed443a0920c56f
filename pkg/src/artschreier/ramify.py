"""Biquadratic extensions as planes in K/wp(K).

Break classification, Hasse-Herbrand conversion, lower ramification
filtrations, Artin conductors and canonical formal degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded, DegeneratePlane, NonIntegralExponent
from .gf2f import FieldCtx, render_poly
from .wpquot import WpCoset, coset_level, filtration_dim, filtration_dim_paper_eq2, mask_level

MAX_ENUM_DIM = 24

CASES = ("Case1", "Case21", "Case22")

# Group orders and dim(g / g^H) for g = so_3 under the three possible D_i.
GROUP_ORDER = {"V4": 4, "C2": 2, "Triv": 1}
COINVARIANT_DIM = {"V4": 3, "C2": 2, "Triv": 0}


@dataclass(frozen=True, eq=False)
class PlaneDescriptor:
    u: WpCoset
    v: WpCoset

    def __post_init__(self) -> None:
        if self.u.ctx != self.v.ctx:
            raise DegeneratePlane("basis vectors live over different fields")
        if self.u.is_zero or self.v.is_zero or self.u == self.v:
            raise DegeneratePlane(f"{self.u} and {self.v} are F_2-dependent")

    @property
    def ctx(self) -> FieldCtx:
        return self.u.ctx

    def elements(self) -> tuple[WpCoset, WpCoset, WpCoset]:
        """The three nonzero cosets, sorted."""
        return tuple(sorted((self.u, self.v, self.u + self.v)))  # type: ignore[return-value]

    def key(self) -> tuple[int, int, int]:
        return tuple(sorted((self.u.mask, self.v.mask, self.u.mask ^ self.v.mask)))  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneDescriptor):
            return NotImplemented
        return self.ctx == other.ctx and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.ctx, self.key()))

    def __str__(self) -> str:
        return "span{" + ", ".join(str(e) for e in self.elements()[:2]) + "}"


@dataclass(frozen=True)
class BreakData:
    case: str
    t1: int
    t2: int | None = None

    def __post_init__(self) -> None:
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        for t in self.breaks:
            if t <= 0 or t % 2 == 0:
                raise ValueError(f"breaks must be odd and positive, got {self.breaks}")
        if self.case == "Case22":
            if self.t2 is None or not self.t1 < self.t2:
                raise ValueError("Case22 needs t1 < t2")
        elif self.t2 is not None:
            raise ValueError(f"{self.case} has a single break")

    @classmethod
    def case1(cls, t: int) -> BreakData:
        return cls("Case1", t)

    @classmethod
    def case21(cls, t: int) -> BreakData:
        return cls("Case21", t)

    @classmethod
    def case22(cls, t1: int, t2: int) -> BreakData:
        return cls("Case22", t1, t2)

    @property
    def t(self) -> int:
        return self.t1

    @property
    def breaks(self) -> tuple[int, ...]:
        return (self.t1,) if self.t2 is None else (self.t1, self.t2)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return CASES.index(self.case), self.breaks

    def __str__(self) -> str:
        return f"{self.case}({', '.join(map(str, self.breaks))})"


@dataclass(frozen=True)
class Segment:
    lo: int
    hi: int | None  # None means unbounded
    group: str


@dataclass(frozen=True)
class RamFiltration:
    segments: tuple[Segment, ...]

    def group_at(self, i: int) -> str:
        for s in self.segments:
            if s.lo <= i and (s.hi is None or i <= s.hi):
                return s.group
        raise ValueError(f"index {i} not covered")

    def lower_breaks(self) -> list[int]:
        """Indices t with G_t != G_{t+1}."""
        return [s.hi for s in self.segments if s.hi is not None]


def classify_plane(w: PlaneDescriptor) -> BreakData:
    levels = [coset_level(e) for e in (w.u, w.v, w.u + w.v)]
    ram = sorted(lv.t for lv in levels if lv.kind == "ramified")
    if len(ram) == 2:
        return BreakData.case1(ram[1])
    if ram[0] == ram[2]:
        return BreakData.case21(ram[0])
    return BreakData.case22(ram[0], ram[2])


def upper_breaks(bd: BreakData) -> list[int]:
    if bd.case == "Case1":
        return [-1, bd.t]
    return list(bd.breaks)


def _index_table(bd: BreakData) -> list[tuple[int | None, int]]:
    """(G^0 : G^u) as [(upper end of interval, index)], starting at u = 0."""
    if bd.case == "Case1":
        return [(bd.t, 1), (None, 2)]
    if bd.case == "Case21":
        return [(bd.t, 1), (None, 4)]
    return [(bd.t1, 1), (bd.t2, 2), (None, 4)]


def hasse_herbrand_psi(bd: BreakData, u: Fraction | int) -> Fraction:
    """psi(u) = integral_0^u (G^0 : G^v) dv, extended by psi(u) = u on [-1, 0]."""
    u = Fraction(u)
    if u < -1:
        raise ValueError("psi is defined for u >= -1")
    if u <= 0:
        return u
    acc = Fraction(0)
    lo = Fraction(0)
    for hi, idx in _index_table(bd):
        top = u if hi is None else min(u, Fraction(hi))
        if top > lo:
            acc += idx * (top - lo)
        if hi is None or u <= hi:
            break
        lo = Fraction(hi)
    return acc


def _segments(spans: list[tuple[int, int | None, str]]) -> RamFiltration:
    return RamFiltration(tuple(Segment(lo, hi, g) for lo, hi, g in spans if hi is None or lo <= hi))


def case22_filtration(t1: int, t2: int) -> RamFiltration:
    """Lower filtration for upper breaks t1 <= t2; t1 == t2 collapses the middle segment."""
    top = 2 * t2 - t1
    return _segments([(-1, t1, "V4"), (t1 + 1, top, "C2"), (top + 1, None, "Triv")])


def lower_filtration(bd: BreakData) -> RamFiltration:
    if bd.case == "Case1":
        return _segments([(-1, -1, "V4"), (0, bd.t, "C2"), (bd.t + 1, None, "Triv")])
    if bd.case == "Case21":
        return _segments([(-1, bd.t, "V4"), (bd.t + 1, None, "Triv")])
    return case22_filtration(bd.t1, bd.t2)


def conductor_paper(bd: BreakData) -> int:
    """The published closed forms."""
    if bd.case == "Case1":
        return (1 + bd.t) * 2
    if bd.case == "Case21":
        return (bd.t + 1) * 3
    return 3 + 3 * bd.t1 + 2 * bd.t2


def conductor_from_filtration(filt: RamFiltration) -> Fraction:
    """sum_{i >= 0} dim(g / g^{D_i}) / [D_0 : D_i], read segment by segment."""
    d0 = GROUP_ORDER[filt.group_at(0)]
    total = Fraction(0)
    for s in filt.segments:
        lo = max(s.lo, 0)
        if COINVARIANT_DIM[s.group] == 0:
            continue
        if s.hi is None:
            raise ValueError("nontrivial group on an unbounded segment")
        if s.hi < lo:
            continue
        total += Fraction((s.hi - lo + 1) * COINVARIANT_DIM[s.group] * GROUP_ORDER[s.group], d0)
    return total


def conductor(bd: BreakData, source: str = "paper") -> Fraction:
    if source == "paper":
        return Fraction(conductor_paper(bd))
    if source == "filtration":
        return conductor_from_filtration(lower_filtration(bd))
    raise ValueError(f"unknown conductor source {source!r}")


def formal_degree(bd: BreakData, ctx: FieldCtx, conductor_source: str = "paper", base: str = "two") -> Fraction:
    """(1/4) * (2/q) * base^(alpha/2), exactly.

    With the defaults this is 2^(t-f), 2^(3(1+t)/2-f-1) and
    2^(3(1+t1)/2+t2-f-1) for the three cases.
    """
    alpha = conductor(bd, conductor_source)
    if base == "two":
        log2_base = 1
    elif base == "q":
        log2_base = ctx.f
    else:
        raise ValueError(f"unknown base {base!r}")
    e = log2_base * alpha / 2
    if e.denominator != 1:
        raise NonIntegralExponent(f"base^(alpha/2) = 2^{e} is irrational")
    # (1/4)(2/q) = 2^(-1-f)
    return Fraction(2) ** (int(e) - ctx.f - 1)


def gaussian_binomial_2(d: int) -> int:
    """Number of 2-dimensional subspaces of F_2^d."""
    return (2**d - 1) * (2 ** (d - 1) - 1) // 3


def _check_budget(ctx: FieldCtx, nmax: int) -> int:
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    d = filtration_dim(nmax, ctx)
    if d > MAX_ENUM_DIM:
        raise BudgetExceeded(f"dim V_{nmax} = {d} exceeds the enumeration budget {MAX_ENUM_DIM}")
    return d


def enumerate_planes(ctx: FieldCtx, nmax: int) -> Iterator[PlaneDescriptor]:
    """Each plane of V_nmax once, ordered lexicographically by its sorted triple."""
    d = _check_budget(ctx, nmax)
    n = 1 << d
    for x in range(1, n):
        for y in range(x + 1, n):
            if x ^ y > y:
                yield PlaneDescriptor(WpCoset.from_mask(ctx, x), WpCoset.from_mask(ctx, y))


def count_by_breaks(ctx: FieldCtx, nmax: int) -> dict[BreakData, int]:
    """Tally the planes of V_nmax by break data.

    Works on coset masks directly; each row x of the pair loop is
    vectorized.  Result keys are ordered by case, then breaks.
    """
    d = _check_budget(ctx, nmax)
    n = 1 << d
    levels = np.array([mask_level(m, ctx.f) for m in range(n)], dtype=np.int64)
    width = 2 * nmax + 4
    codes: dict[int, int] = {}
    for x in range(1, n):
        ys = np.arange(x + 1, n, dtype=np.int64)
        zs = ys ^ x
        keep = zs > ys
        if not keep.any():
            continue
        ys, zs = ys[keep], zs[keep]
        lx = levels[x]
        ly, lz = levels[ys], levels[zs]
        lo = np.minimum(np.minimum(ly, lz), lx)
        hi = np.maximum(np.maximum(ly, lz), lx)
        # case 0: an unramified member; case 1: one break; case 2: two breaks
        case = np.where(lo == 0, 0, np.where(lo == hi, 1, 2))
        t1 = np.where(case == 2, lo, hi)
        t2 = np.where(case == 2, hi, 0)
        code = (case * width + t1) * width + t2
        vals, counts = np.unique(code, return_counts=True)
        for v, c in zip(vals.tolist(), counts.tolist()):
            codes[v] = codes.get(v, 0) + c
    out: dict[BreakData, int] = {}
    for code in sorted(codes):
        rest, t2 = divmod(code, width)
        case, t1 = divmod(rest, width)
        bd = BreakData(CASES[case], t1, t2 or None)
        out[bd] = codes[code]
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def _num(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


def tally_record(bd: BreakData, ctx: FieldCtx, count: int | None = None) -> dict:
    """Per-break JSON fragment; degrees are decimal strings to survive 2^53."""
    rec: dict = {"case": bd.case, "breaks": list(bd.breaks)}
    if count is not None:
        rec["count"] = count
    cp = conductor_paper(bd)
    cf = conductor(bd, "filtration")
    rec["conductor_paper"] = cp
    rec["conductor_filtration"] = _num(cf)
    rec["conductor_difference"] = _num(cp - cf)
    rec["formal_degree"] = str(formal_degree(bd, ctx))
    return rec


def field_record(ctx: FieldCtx) -> dict:
    return {"f": ctx.f, "modulus": render_poly(ctx.modulus)}


def census_tallies(ctx: FieldCtx, nmax: int, tallies: dict[BreakData, int] | None = None) -> dict:
    """Break census of V_nmax in the fixed golden-file key order."""
    if tallies is None:
        tallies = count_by_breaks(ctx, nmax)
    return {
        "field": field_record(ctx),
        "nmax": nmax,
        "dim": filtration_dim(nmax, ctx),
        "dim_paper_eq2": filtration_dim_paper_eq2(nmax),
        "total_planes": sum(tallies.values()),
        "tallies": [tally_record(bd, ctx, c) for bd, c in tallies.items()],
    }


def classify_record(w: PlaneDescriptor) -> dict:
    bd = classify_plane(w)
    filt = lower_filtration(bd)
    rec = {"field": field_record(w.ctx), "plane": [str(e) for e in w.elements()]}
    rec.update(tally_record(bd, w.ctx))
    rec["upper_breaks"] = upper_breaks(bd)
    rec["lower_breaks"] = filt.lower_breaks()
    rec["lower_filtration"] = [{"lo": s.lo, "hi": s.hi, "group": s.group} for s in filt.segments]
    rec["formal_degree_filtration"] = str(formal_degree(bd, w.ctx, conductor_source="filtration"))
    return rec
