"""Matrices with polynomial entries and their determinants."""

from typing import Any, List, Optional, Sequence

import numpy as np

from twoarcs.algebra.poly import Poly, circle_nodes, poly_interpolate
from twoarcs.algebra.scalar import ScalarMode
from twoarcs.utils.error_handler import ModeMismatchError

# relative size of interpolation round-off in the top coefficients
INTERPOLATION_NOISE = 1e-12


class PolyMat:
    """Rectangular row-major matrix of ``Poly`` entries sharing one scalar mode."""

    __slots__ = ("rows", "cols", "entries", "mode")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Sequence[Any],
        mode: Optional[ScalarMode] = None,
    ):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        polys: List[Poly] = []
        for e in entries:
            polys.append(e if isinstance(e, Poly) else Poly.constant(e, mode))
        if mode is None:
            mode = polys[0].mode if polys else ScalarMode.EXACT
        for p in polys:
            if p.mode is not mode:
                raise ModeMismatchError("matrix entries mix exact and approximate polynomials")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(polys)
        self.mode = mode

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Any]], mode: Optional[ScalarMode] = None
    ) -> "PolyMat":
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r], mode)

    def __getitem__(self, key: tuple) -> Poly:
        r, c = key
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> List[Poly]:
        return list(self.entries[r * self.cols : (r + 1) * self.cols])

    def with_column(self, c: int, column: Sequence[Any]) -> "PolyMat":
        """Copy with column ``c`` replaced."""
        if len(column) != self.rows:
            raise ValueError("replacement column has the wrong length")
        entries = list(self.entries)
        for r, e in enumerate(column):
            entries[r * self.cols + c] = e
        return PolyMat(self.rows, self.cols, entries, self.mode)

    def degree_bound(self) -> int:
        """Upper bound on the determinant degree: sum over rows of the largest entry degree."""
        total = 0
        for r in range(self.rows):
            total += max((max(p.degree, 0) for p in self.row(r)), default=0)
        return total

    def evaluate(self, z: Any) -> np.ndarray:
        return np.array(
            [[complex(self[r, c](z)) for c in range(self.cols)] for r in range(self.rows)],
            dtype=complex,
        )

    def __repr__(self) -> str:
        return f"PolyMat({self.rows}x{self.cols}, {self.mode.value})"


def _bareiss_det(mat: PolyMat) -> Poly:
    dim = mat.rows
    if dim == 1:
        return mat[0, 0]
    if dim == 2:
        return mat[0, 0] * mat[1, 1] - mat[1, 0] * mat[0, 1]
    work = [mat.row(r) for r in range(dim)]
    prev_pivot = Poly.one(mat.mode)
    sign = 1
    for k in range(dim - 1):
        pivot_row = k
        while work[pivot_row][k].is_zero:
            pivot_row += 1
            if pivot_row == dim:
                return Poly.zero(mat.mode)
        if pivot_row != k:
            work[pivot_row], work[k] = work[k], work[pivot_row]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, dim):
            for j in range(k + 1, dim):
                num = pivot * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = num.exact_quotient(prev_pivot)
            work[i][k] = Poly.zero(mat.mode)
        prev_pivot = pivot
    last = work[dim - 1][dim - 1]
    return last if sign > 0 else -last


def polymat_det(
    mat: PolyMat,
    degree_bound: Optional[int] = None,
    radius: float = 1.0,
) -> Poly:
    """
    Determinant of a square polynomial matrix.

    Exact matrices use fraction-free (Bareiss) elimination, where every
    division is an exact polynomial division. Approximate matrices are
    evaluated at ``degree_bound + 1`` points on a circle of the given radius
    and the determinant polynomial is interpolated from numpy determinants.

    Args:
        mat: Square matrix
        degree_bound: Upper bound on the determinant degree (approximate mode only)
        radius: Radius of the sampling circle (approximate mode only)

    Returns:
        The determinant; 1 for the empty matrix.
    """
    if mat.rows != mat.cols:
        raise ValueError(f"determinant of a non-square {mat.rows}x{mat.cols} matrix")
    if mat.rows == 0:
        return Poly.one(mat.mode)

    if mat.mode is ScalarMode.EXACT:
        return _bareiss_det(mat)

    if degree_bound is None:
        raise ValueError("approximate determinant needs a degree bound")
    if all(p.degree <= 0 for p in mat.entries):
        return Poly.constant(complex(np.linalg.det(mat.evaluate(0j))), ScalarMode.APPROX)
    nodes = circle_nodes(degree_bound + 1, radius)
    samples = [(z, complex(np.linalg.det(mat.evaluate(z)))) for z in nodes]
    return poly_interpolate(samples, ScalarMode.APPROX).chop(INTERPOLATION_NOISE)
