"""Chain root tracks into the Jordan arcs of the inverse image."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from twoarcs.preimage.sampling import PreimageSample
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)

# (track, 0) is the end at t = -1, (track, 1) the end at t = +1
End = Tuple[int, int]


@dataclass
class Arcs:
    """Polylines of the inverse image; ``cloud`` when the tracks could not be chained."""

    polylines: List[List[complex]]
    track_arc: List[int] = field(default_factory=list)
    cloud: bool = False

    def __len__(self) -> int:
        return len(self.polylines)

    def endpoints(self) -> List[complex]:
        """First and last point of every polyline."""
        out: List[complex] = []
        for line in self.polylines:
            if line:
                out.extend([line[0], line[-1]])
        return out


def _tracks(samples: Sequence[PreimageSample]) -> List[List[complex]]:
    count = len(samples[0].roots)
    return [[s.roots[j] for s in samples] for j in range(count)]


def _partners(tracks: List[List[complex]], join_tol: float) -> Optional[Dict[End, End]]:
    """End-to-end joins; None when some end meets more than one other end."""
    ends: List[Tuple[End, complex]] = []
    for j, track in enumerate(tracks):
        ends.append(((j, 0), track[0]))
        ends.append(((j, 1), track[-1]))
    partners: Dict[End, End] = {}
    for i, (e1, z1) in enumerate(ends):
        for e2, z2 in ends[i + 1 :]:
            if e1[0] == e2[0] or abs(z1 - z2) > join_tol * max(1.0, abs(z1)):
                continue
            if e1 in partners or e2 in partners:
                return None
            partners[e1] = e2
            partners[e2] = e1
    return partners


def _walk(
    start: End, tracks: List[List[complex]], partners: Dict[End, End]
) -> Tuple[List[complex], List[int]]:
    line: List[complex] = []
    used: List[int] = []
    current: Optional[End] = start
    while current is not None:
        j, side = current
        if j in used:
            break
        points = tracks[j] if side == 0 else list(reversed(tracks[j]))
        line.extend(points[1:] if line else points)
        used.append(j)
        current = partners.get((j, 1 - side))
    return line, used


def order_into_arcs(
    samples: Sequence[PreimageSample], join_tol: float = 1e-6
) -> Arcs:
    """
    Join tracks whose ends coincide (double roots of T**2 - 1) into polylines.

    Each polyline starts and ends at a simple root of T**2 - 1, i.e. at an
    endpoint of the inverse image. A valid tuple gives two polylines, a
    degenerate one a single polyline. If an end touches several others, or
    tracks close into a loop, the tracks are returned unchained with
    ``cloud=True``.
    """
    if not samples or not samples[0].roots:
        return Arcs([])
    tracks = _tracks(samples)
    partners = _partners(tracks, join_tol)
    if partners is not None:
        polylines: List[List[complex]] = []
        track_arc = [-1] * len(tracks)
        ends = [(j, side) for j in range(len(tracks)) for side in (0, 1)]
        free = [end for end in ends if end not in partners]
        for end in free:
            if track_arc[end[0]] >= 0:
                continue
            line, used = _walk(end, tracks, partners)
            for j in used:
                track_arc[j] = len(polylines)
            polylines.append(line)
        if all(a >= 0 for a in track_arc):
            return Arcs(polylines, track_arc)
    logger.warning("root tracks could not be chained into arcs; emitting a point cloud")
    return Arcs([list(t) for t in tracks], list(range(len(tracks))), cloud=True)
