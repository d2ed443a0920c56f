"""Command-line entry point.

Subcommands: reduce, symbol, classify, census, triangle, spectrum.

Exit codes:
    0  success
    2  malformed input (parse errors, bad field or flags, b = 0 in a symbol)
    3  precision exhausted
    4  degenerate plane (classify with dependent cosets)
    5  enumeration budget exceeded
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import (
    ArtSchreierError,
    BudgetExceeded,
    DegeneratePlane,
    ParseError,
    PrecisionExhausted,
)
from .gf2f import FieldCtx, fq_new
from .grammar import ls_parse
from .laurent import wp_apply
from .packets import BernsteinPointDesc, component_of, render_spectrum, spectrum_census, triangle
from .ramify import PlaneDescriptor, classify_plane, classify_record
from .wpquot import WpCoset, as_symbol, coset_level, reduce_mod_wp

EXIT_PARSE, EXIT_PRECISION, EXIT_DEGENERATE, EXIT_BUDGET = 2, 3, 4, 5


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    f: int = 1
    modulus: int | None = None
    precision: int = 64
    nmax: int = 1
    output: str = "text"
    seed: int = 0  # reserved for randomized checks; every subcommand is deterministic

    def __post_init__(self) -> None:
        if not 1 <= self.f <= 16:
            raise UsageError(f"--f must lie in 1..16, got {self.f}")
        if self.precision < 16:
            raise UsageError(f"--precision must be >= 16, got {self.precision}")
        if self.nmax < 0:
            raise UsageError(f"--nmax must be >= 0, got {self.nmax}")

    def field(self) -> FieldCtx:
        return fq_new(self.f, self.modulus)


def parse_modulus(text: str) -> int:
    """Modulus as a polynomial in g (``g^3+g+1``) or an integer literal (``0b1011``, ``0xb``)."""
    t = text.strip()
    if t[:2].lower() in ("0b", "0x") or t.isdigit():
        return int(t, 0)
    bits = 0
    for term in t.replace(" ", "").split("+"):
        if term == "1":
            e = 0
        elif term == "g":
            e = 1
        elif term.startswith("g^") and term[2:].isdigit():
            e = int(term[2:])
        else:
            raise UsageError(f"cannot read modulus term {term!r}")
        bits ^= 1 << e
    return bits


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_reduce(cfg: RunConfig, expr: str, witness: bool = False) -> str:
    ctx = cfg.field()
    a = ls_parse(expr, ctx, cfg.precision)
    red = reduce_mod_wp(a, witness=True)
    coset = red.coset
    verified = None
    if witness:
        verified = wp_apply(red.witness) == a + coset.lift(a.prec)
    level = coset_level(coset)
    if cfg.output == "json":
        rec = {"input": expr, "coset": str(coset), "level": level.kind, "break": level.t}
        if witness:
            rec["witness"] = str(red.witness)
            rec["witness_verified"] = verified
        return _dump(rec)
    out = str(coset) + "\n"
    if witness:
        out += f"witness: {'verified' if verified else 'FAILED'}\n"
    return out


def cmd_symbol(cfg: RunConfig, a_text: str, b_text: str) -> str:
    ctx = cfg.field()
    a = ls_parse(a_text, ctx, cfg.precision)
    b = ls_parse(b_text, ctx, cfg.precision)
    s = as_symbol(a, b)
    chi = -1 if s else 1
    if cfg.output == "json":
        return _dump({"a": a_text, "b": b_text, "symbol": s, "chi": chi})
    return f"{s}\nchi = {chi:+d}\n"


def _coset(text: str, ctx: FieldCtx, prec: int) -> WpCoset:
    return reduce_mod_wp(ls_parse(text, ctx, prec))


def cmd_classify(cfg: RunConfig, a_text: str, b_text: str) -> str:
    ctx = cfg.field()
    w = PlaneDescriptor(_coset(a_text, ctx, cfg.precision), _coset(b_text, ctx, cfg.precision))
    rec = classify_record(w)
    if cfg.output == "json":
        return _dump(rec)
    bd = classify_plane(w)
    return (
        f"{bd}\n"
        f"plane: {', '.join(rec['plane'])}\n"
        f"lower breaks: {rec['lower_breaks']}\n"
        f"conductor (closed form): {rec['conductor_paper']}\n"
        f"conductor (filtration): {rec['conductor_filtration']}\n"
        f"formal degree: {rec['formal_degree']}\n"
    )


def cmd_census(cfg: RunConfig, dot: bool = False) -> str:
    census = spectrum_census(cfg.field(), cfg.nmax)
    if cfg.output == "dot":
        return render_spectrum(census)
    if cfg.output == "json":
        out = _dump(census.to_json())
    else:
        rec = census.to_json()
        lines = [
            f"f={rec['field']['f']} modulus={rec['field']['modulus']} nmax={cfg.nmax}",
            f"dim V_nmax = {rec['dim']} (published closed form: {rec['dim_paper_eq2']})",
            f"planes: {rec['total_planes']}",
        ]
        for t in rec["tallies"]:
            lines.append(
                f"  {t['case'] + '(' + ', '.join(map(str, t['breaks'])) + ')':<16} count={t['count']:<8}"
                f" alpha={t['conductor_paper']}/{t['conductor_filtration']} deg={t['formal_degree']}"
            )
        sp = rec["spectrum"]
        lines.append(
            f"quadratic cosets={sp['quadratic_cosets']} arcs={sp['principal_arcs']}"
            f" double points={sp['double_points']}"
            f" supercuspidal points={sp['supercuspidal_isolated_points']}"
        )
        out = "\n".join(lines) + "\n"
    if dot:
        out += render_spectrum(census)
    return out


def cmd_triangle(cfg: RunConfig, kind: str, arg: str | None) -> str:
    ctx = cfg.field()
    if kind == "trivial":
        s = BernsteinPointDesc.trivial()
    elif kind == "quadratic":
        if arg is None:
            raise UsageError("triangle quadratic needs a coset expression")
        s = BernsteinPointDesc.quadratic(_coset(arg, ctx, cfg.precision))
    elif kind == "nonquadratic":
        s = BernsteinPointDesc.nonquadratic(arg or "chi")
    else:
        raise UsageError(f"unknown Bernstein point kind {kind!r}")
    tri = triangle(s)
    shape = component_of(s)
    rec = {
        "point": kind if s.coset is None else f"{kind}({s.coset})",
        "eq_points": [list(p) for p in tri.eq_points],
        "irreps": list(tri.irreps),
        "params": [p.label for p in tri.params],
        "bijections": {
            "eq_to_irr": [[f"({p[0]},{p[1]})", tri.left[p]] for p in tri.eq_points],
            "eq_to_param": [[f"({p[0]},{p[1]})", tri.right[p].label] for p in tri.eq_points],
            "irr_to_param": [[r, tri.bottom[r].label] for r in tri.irreps],
        },
        "commutes": tri.commutes(),
        "component": {
            "topology": shape.topology,
            "special_points": [
                {
                    "position": p.position,
                    "label": p.label,
                    "fiber": list(p.fiber),
                    "isolated": list(p.isolated),
                    "tempered": list(p.tempered),
                }
                for p in shape.special_points
            ],
        },
    }
    if cfg.output == "json":
        return _dump(rec)
    lines = [f"point: {rec['point']}"]
    for p in tri.eq_points:
        lines.append(f"  ({p[0]},{p[1]}) -> {tri.left[p]} -> {tri.right[p].label}")
    lines.append(f"commutes: {tri.commutes()}")
    lines.append(f"component: {shape.topology}")
    for p in shape.special_points:
        lines.append(f"  {p.position}: {', '.join(p.fiber)}")
    return "\n".join(lines) + "\n"


def cmd_spectrum(cfg: RunConfig) -> str:
    census = spectrum_census(cfg.field(), cfg.nmax)
    if cfg.output == "json":
        return _dump(census.to_json())
    return render_spectrum(census)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--f", type=int, default=1, help="residue degree, q = 2^f")
    common.add_argument("--modulus", help="defining polynomial of F_q, e.g. g^3+g+1")
    common.add_argument("--precision", type=int, default=64)
    common.add_argument("--nmax", type=int, default=1, help="filtration level for enumeration")
    common.add_argument("--output", choices=("text", "json", "dot"), default=None)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="artschreier", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("reduce", parents=[common], help="canonical representative of a + wp(K)")
    r.add_argument("expr")
    r.add_argument("--witness", action="store_true", help="verify a + lift = wp(w) constructively")
    s = sub.add_parser("symbol", parents=[common], help="Artin-Schreier symbol [a, b)")
    s.add_argument("a")
    s.add_argument("b")
    c = sub.add_parser("classify", parents=[common], help="break data of span{a, b}")
    c.add_argument("a")
    c.add_argument("b")
    ce = sub.add_parser("census", parents=[common], help="tally planes of V_nmax by breaks")
    ce.add_argument("--dot", action="store_true", help="append the spectrum diagram")
    t = sub.add_parser("triangle", parents=[common], help="triangle of bijections for a Bernstein point")
    t.add_argument("kind", choices=("trivial", "quadratic", "nonquadratic"))
    t.add_argument("arg", nargs="?", help="coset expression (quadratic) or tag (nonquadratic)")
    sub.add_parser("spectrum", parents=[common], help="DOT picture of the tempered principal series")
    return p


_DEFAULT_OUTPUT = {"classify": "json", "census": "json", "spectrum": "dot"}


def run(argv: list[str] | None = None) -> str:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        f=args.f,
        modulus=None if args.modulus is None else parse_modulus(args.modulus),
        precision=args.precision,
        nmax=args.nmax,
        output=args.output or _DEFAULT_OUTPUT.get(args.cmd, "text"),
        seed=args.seed,
    )
    if args.cmd == "reduce":
        return cmd_reduce(cfg, args.expr, args.witness)
    if args.cmd == "symbol":
        return cmd_symbol(cfg, args.a, args.b)
    if args.cmd == "classify":
        return cmd_classify(cfg, args.a, args.b)
    if args.cmd == "census":
        return cmd_census(cfg, args.dot)
    if args.cmd == "triangle":
        return cmd_triangle(cfg, args.kind, args.arg)
    return cmd_spectrum(cfg)


def main(argv: list[str] | None = None) -> int:
    try:
        out = run(argv)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except PrecisionExhausted as e:
        print(f"precision exhausted: {e}", file=sys.stderr)
        return EXIT_PRECISION
    except DegeneratePlane as e:
        print(f"degenerate plane: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ArtSchreierError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
