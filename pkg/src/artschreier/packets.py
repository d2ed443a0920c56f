"""Label-level model of L-packets, enhanced parameters and the tempered dual.

Representations are plain string labels: ``pi[a]+`` / ``pi[a]-`` for the two
constituents of the principal series induced from the quadratic character of
coset ``a``, ``St`` and ``1_G`` at the trivial character, and
``pi[W](i,j)`` for the four supercuspidals attached to the plane ``W``.
Points of the unit circle that matter (the fixed points of z -> 1/z) are
kept symbolic as ``plus_one`` / ``minus_one``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .gf2f import FieldCtx
from .laurent import LaurentSeries
from .ramify import (
    BreakData,
    PlaneDescriptor,
    census_tallies,
    classify_plane,
    count_by_breaks,
    formal_degree,
)
from .wpquot import WpCoset, coset_level, filtration_dim, quad_char

PLUS, MINUS = "plus_one", "minus_one"
J_CHARACTERS = ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
ENHANCEMENTS = {
    "principal": ("triv",),
    "trivialparam": ("triv",),
    "nonquadratic": ("triv",),
    "quadratic": ("triv", "rho"),
    "biquadratic": J_CHARACTERS,
}


@dataclass(frozen=True)
class BernsteinPointDesc:
    """s = [T, chi]: ``kind`` is 'trivial', 'quadratic' (with coset) or 'nonquadratic' (with tag)."""

    kind: str
    coset: WpCoset | None = None
    tag: str | None = None

    def __post_init__(self) -> None:
        if self.kind == "quadratic":
            if self.coset is None or self.coset.is_zero:
                raise ValueError("a quadratic point needs a nonzero coset")
        elif self.kind == "nonquadratic":
            if self.tag is None:
                raise ValueError("a nonquadratic point needs a tag")
        elif self.kind != "trivial":
            raise ValueError(f"unknown Bernstein point kind {self.kind!r}")

    @classmethod
    def trivial(cls) -> BernsteinPointDesc:
        return cls("trivial")

    @classmethod
    def quadratic(cls, coset: WpCoset) -> BernsteinPointDesc:
        return cls("quadratic", coset=coset)

    @classmethod
    def nonquadratic(cls, tag: str) -> BernsteinPointDesc:
        return cls("nonquadratic", tag=tag)


@dataclass(frozen=True)
class EnhancedParam:
    parameter: str
    data: Union[WpCoset, PlaneDescriptor, str, None]
    enhancement: str

    def __post_init__(self) -> None:
        allowed = ENHANCEMENTS.get(self.parameter)
        if allowed is None:
            raise ValueError(f"unknown parameter kind {self.parameter!r}")
        if self.enhancement not in allowed:
            raise ValueError(f"{self.enhancement!r} is not a character of S_phi for {self.parameter}")

    @property
    def label(self) -> str:
        if self.parameter == "principal":
            base = "phi0"
        elif self.parameter == "trivialparam":
            base = "phi1"
        else:
            base = f"phi[{self.data}]"
        return f"{base}({self.enhancement})"


@dataclass(frozen=True)
class PacketDescriptor:
    constituents: tuple[str, ...]
    origin: Union[BernsteinPointDesc, PlaneDescriptor]
    degrees: tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        n = 4 if isinstance(self.origin, PlaneDescriptor) else 2
        if len(self.constituents) != n:
            raise ValueError(f"expected {n} constituents, got {len(self.constituents)}")


@dataclass(frozen=True)
class SpecialPoint:
    position: str
    fiber: tuple[str, ...]
    isolated: tuple[bool, ...]
    tempered: tuple[bool, ...]
    label: str = ""  # packet label as drawn in the tempered-dual picture


@dataclass(frozen=True)
class ComponentShape:
    topology: str  # 'free_circle' or 'folded_arc'
    special_points: tuple[SpecialPoint, ...] = ()

    def __post_init__(self) -> None:
        if self.topology == "folded_arc":
            if sorted(p.position for p in self.special_points) != [MINUS, PLUS]:
                raise ValueError("a folded arc has exactly the two special positions +1 and -1")
            if any(len(p.fiber) != 2 for p in self.special_points):
                raise ValueError("special fibers of a folded arc have size 2")
        elif self.topology != "free_circle":
            raise ValueError(f"unknown topology {self.topology!r}")

    def fiber(self, position: str) -> tuple[str, ...]:
        for p in self.special_points:
            if p.position == position:
                return p.fiber
        return ()

    def point(self, position: str) -> SpecialPoint:
        return next(p for p in self.special_points if p.position == position)


def packet_label(a: WpCoset | None) -> str:
    return "pi[1]" if a is None or a.is_zero else f"pi[{a}]"


def principal_packet(a: WpCoset) -> PacketDescriptor:
    """{pi_chi^+, pi_chi^-} for the quadratic character of a nonzero coset."""
    lab = packet_label(a)
    return PacketDescriptor((lab + "+", lab + "-"), BernsteinPointDesc.quadratic(a))


def extended_quotient_circle() -> ComponentShape:
    """(T//W)_2 for W = Z/2 acting by z -> 1/z: doubled fibers at the fixed points +-1."""
    pts = tuple(
        SpecialPoint(pos, (f"({z},triv)", f"({z},rho)"), (False, False), (True, True))
        for pos, z in ((PLUS, 1), (MINUS, -1))
    )
    return ComponentShape("folded_arc", pts)


def eq_fiber_size(z: complex | str) -> int:
    """Size of the (T//W)_2 fiber over z: 2 at the W-fixed points, 1 elsewhere."""
    if z in (PLUS, MINUS, 1, -1):
        return 2
    return 1


@dataclass
class Triangle:
    eq_points: tuple[tuple[str, str], ...]
    irreps: tuple[str, ...]
    params: tuple[EnhancedParam, ...]
    left: dict[tuple[str, str], str] = field(default_factory=dict)  # (T//W)_2 -> Irr
    right: dict[tuple[str, str], EnhancedParam] = field(default_factory=dict)  # (T//W)_2 -> L
    bottom: dict[str, EnhancedParam] = field(default_factory=dict)  # Irr -> L

    def commutes(self) -> bool:
        return all(self.bottom[self.left[p]] == self.right[p] for p in self.eq_points)

    def is_bijective(self) -> bool:
        n = len(self.eq_points)
        return (
            len(self.irreps) == n
            and len(self.params) == n
            and len(set(self.left.values())) == n
            and len(set(self.right.values())) == n
            and len(set(self.bottom.values())) == n
        )


def chi_at_uniformizer(a: WpCoset) -> str:
    """chi_a(x) = (-1)^[a, x) as a symbolic position."""
    x = LaurentSeries.monomial(a.ctx, 1)
    return PLUS if quad_char(a)(x) == 1 else MINUS


def triangle(s: BernsteinPointDesc) -> Triangle:
    """The three label sets attached to s and the bijections between them."""
    if s.kind == "quadratic":
        a = s.coset
        z = "1" if chi_at_uniformizer(a) == PLUS else "-1"
        pts = ((z, "triv"), (z, "rho"))
        lab = packet_label(a)
        irreps = (lab + "+", lab + "-")
        params = (EnhancedParam("quadratic", a, "triv"), EnhancedParam("quadratic", a, "rho"))
    elif s.kind == "trivial":
        pts = (("1", "triv"), ("1", "rho"))
        irreps = ("St", "1_G")
        params = (EnhancedParam("principal", None, "triv"), EnhancedParam("trivialparam", None, "triv"))
    else:
        pts = ((f"psi[{s.tag}](x)", "triv"),)
        irreps = (f"pi[{s.tag}]",)
        params = (EnhancedParam("nonquadratic", s.tag, "triv"),)
    left = dict(zip(pts, irreps))
    right = dict(zip(pts, params))
    bottom = dict(zip(irreps, params))
    return Triangle(pts, irreps, params, left, right, bottom)


def _special(position: str, a: WpCoset | None) -> SpecialPoint:
    lab = packet_label(a)
    return SpecialPoint(position, (lab + "+", lab + "-"), (False, False), (True, True), lab)


def component_of(s: BernsteinPointDesc) -> ComponentShape:
    """Shape of the Bernstein component of s in the tempered dual.

    A quadratic point whose coset is unramified is inertially the trivial
    point, so it returns the s0 component.
    """
    if s.kind == "nonquadratic":
        return ComponentShape("free_circle")
    if s.kind == "quadratic" and coset_level(s.coset).kind == "ramified":
        a = s.coset
        a0 = WpCoset.unramified(a.ctx)
        return ComponentShape("folded_arc", (_special(PLUS, a), _special(MINUS, a + a0)))
    plus = SpecialPoint(PLUS, ("St", "1_G"), (True, False), (True, False), "pi[1]")
    minus = SpecialPoint(MINUS, ("pi[a0]+", "pi[a0]-"), (False, False), (True, True), "pi[a0]")
    return ComponentShape("folded_arc", (plus, minus))


def supercuspidal_packet(w: PlaneDescriptor, ctx: FieldCtx | None = None) -> PacketDescriptor:
    """The four supercuspidals of the biquadratic parameter, all of one formal degree."""
    ctx = ctx or w.ctx
    deg = formal_degree(classify_plane(w), ctx)
    lab = "pi[{" + ", ".join(str(e) for e in w.elements()) + "}]"
    return PacketDescriptor(tuple(lab + c for c in J_CHARACTERS), w, (deg,) * 4)


@dataclass
class SpectrumCensus:
    ctx: FieldCtx
    nmax: int
    dim: int
    quadratic_cosets: int
    principal_arcs: int
    double_points: int
    supercuspidal_isolated_points: int
    tallies: dict[BreakData, int]
    arcs: list[tuple[str, str]]  # (+1 packet label, -1 packet label) per arc; s0 first

    def to_json(self) -> dict:
        rec = census_tallies(self.ctx, self.nmax, tallies=self.tallies)
        rec["spectrum"] = {
            "quadratic_cosets": self.quadratic_cosets,
            "principal_arcs": self.principal_arcs,
            "double_points": self.double_points,
            "supercuspidal_isolated_points": self.supercuspidal_isolated_points,
            "arcs": [list(a) for a in self.arcs],
        }
        return rec


def spectrum_census(ctx: FieldCtx, nmax: int) -> SpectrumCensus:
    tallies = count_by_breaks(ctx, nmax)
    d = filtration_dim(nmax, ctx)
    arcs = [("pi[1]", "pi[a0]")]
    # ramified cosets pair up as {a, a + a0}; the even mask is the representative
    for mask in range(2, 1 << d, 2):
        a = WpCoset.from_mask(ctx, mask)
        arcs.append((packet_label(a), packet_label(WpCoset.from_mask(ctx, mask | 1))))
    return SpectrumCensus(
        ctx=ctx,
        nmax=nmax,
        dim=d,
        quadratic_cosets=2**d - 1,
        principal_arcs=1 + (2**d - 2) // 2,
        double_points=2**d - 1,
        supercuspidal_isolated_points=4 * sum(tallies.values()),
        tallies=tallies,
        arcs=arcs,
    )


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_spectrum(census: SpectrumCensus) -> str:
    """DOT picture of the truncated tempered principal series.

    One cluster per arc, a doubled node (``doubled=true``) per L-packet, and
    the Steinberg point as the single ``isolated=true`` node.  Supercuspidal
    points are only counted in the graph label.
    """
    c = census
    lines = [
        "graph tempered_dual {",
        f"  graph [label={_q(f'f={c.ctx.f} nmax={c.nmax} dim={c.dim} supercuspidal_points={c.supercuspidal_isolated_points}')}];",
        "  node [shape=circle];",
    ]
    for k, (plus, minus) in enumerate(c.arcs):
        lines.append(f"  subgraph cluster_arc{k} {{")
        lines.append(f"    label={_q('s0' if k == 0 else 'arc ' + str(k))};")
        if k == 0:
            lines.append(f"    arc{k}_plus [label={_q(plus)}];")
        else:
            lines.append(f"    arc{k}_plus [label={_q(plus)}, doubled=true, peripheries=2];")
        lines.append(f"    arc{k}_minus [label={_q(minus)}, doubled=true, peripheries=2];")
        lines.append(f"    arc{k}_plus -- arc{k}_minus;")
        lines.append("  }")
    lines.append('  steinberg [label="St", isolated=true, shape=box];')
    lines.append("}")
    return "\n".join(lines) + "\n"
