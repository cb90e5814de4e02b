"""Sampling T^-1([-1, 1]) and rendering it as CSV or SVG."""

from twoarcs.preimage.arcs import Arcs, order_into_arcs
from twoarcs.preimage.emit import CSV_HEADER, emit_csv, emit_svg
from twoarcs.preimage.sampling import (
    PreimageSample,
    chebyshev_grid,
    match_tracks,
    sample_preimage,
)

__all__ = [
    "Arcs",
    "CSV_HEADER",
    "PreimageSample",
    "chebyshev_grid",
    "emit_csv",
    "emit_svg",
    "match_tracks",
    "order_into_arcs",
    "sample_preimage",
]
