"""Artin-Schreier invariants of F_q((x)) in characteristic 2."""

from __future__ import annotations

from .errors import ArtSchreierError
from .gf2f import FieldCtx, FqElem, fq_arith, fq_new, fq_sqrt, fq_trace
from .grammar import ls_parse, ls_render
from .laurent import LaurentSeries, ls_arith, ls_derivative, ls_residue, wp_apply, wp_solve
from .packets import (
    BernsteinPointDesc,
    ComponentShape,
    EnhancedParam,
    PacketDescriptor,
    component_of,
    extended_quotient_circle,
    render_spectrum,
    spectrum_census,
    supercuspidal_packet,
    triangle,
)
from .ramify import (
    BreakData,
    PlaneDescriptor,
    RamFiltration,
    classify_plane,
    conductor_from_filtration,
    conductor_paper,
    count_by_breaks,
    enumerate_planes,
    formal_degree,
    hasse_herbrand_psi,
    lower_filtration,
    upper_breaks,
)
from .wpquot import (
    WpCoset,
    as_symbol,
    coset_add,
    coset_level,
    filtration_dim,
    quad_char,
    reduce_mod_wp,
    vn_basis,
)

__version__ = "0.1.0"
