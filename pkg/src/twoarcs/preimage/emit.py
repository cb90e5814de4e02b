"""CSV and SVG renderings of a sampled inverse image."""

import csv
import io
from typing import List, Optional, Sequence

from twoarcs.preimage.sampling import PreimageSample

CSV_HEADER = ("t", "re", "im", "arc_id")


def _num(x: float) -> str:
    return f"{x:.17g}"


def emit_csv(
    samples: Sequence[PreimageSample], track_arc: Optional[Sequence[int]] = None
) -> bytes:
    """
    One row per sampled root: ``t,re,im,arc_id``.

    ``track_arc`` maps root track j to its arc (see ``Arcs.track_arc``);
    without it the track index is written.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for sample in samples:
        for j, z in enumerate(sample.roots):
            arc = track_arc[j] if track_arc is not None else j
            writer.writerow([_num(sample.t), _num(z.real), _num(z.imag), arc])
    return buffer.getvalue().encode("utf-8")


def emit_svg(polylines: Sequence[Sequence[complex]], width: int = 800, height: int = 600) -> bytes:
    """
    One ``<path>`` per polyline in a viewBox fitted to the data with a 5% margin.

    The imaginary axis points up.
    """
    points = [z for line in polylines for z in line]
    if points:
        xs = [z.real for z in points]
        ys = [-z.imag for z in points]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = y0 = -1.0
        x1 = y1 = 1.0
    span_x = (x1 - x0) or 1.0
    span_y = (y1 - y0) or 1.0
    x0, y0 = x0 - 0.05 * span_x, y0 - 0.05 * span_y
    box_w, box_h = 1.1 * span_x, 1.1 * span_y
    stroke = _num(0.005 * max(box_w, box_h))

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_num(x0)} {_num(y0)} {_num(box_w)} {_num(box_h)}">',
    ]
    for arc_id, line in enumerate(polylines):
        if not line:
            continue
        coords = [f"{_num(z.real)} {_num(-z.imag)}" for z in line]
        d = "M " + " L ".join(coords)
        lines.append(
            f'  <path id="arc{arc_id}" d="{d}" fill="none" stroke="black" '
            f'stroke-width="{stroke}"/>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
