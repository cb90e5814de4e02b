"""Data types for endpoint tuples, candidates and solutions."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from twoarcs.algebra.parsing import format_scalar, poly_to_json
from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import (
    GaussianRational,
    Scalar,
    ScalarMode,
    coerce,
    mode_of,
    scalar_key,
)
from twoarcs.newton.shapes import LABELS, RoleAssignment


class Classification(str, Enum):
    """Outcome for one root of the endpoint polynomial."""

    PROPER = "proper"
    DEGENERATE = "degenerate"  # coincides with a known endpoint
    INVALID = "invalid"  # proper root whose pipeline failed validation


def coincide(x: Scalar, y: Scalar, tol: float = 0.0) -> bool:
    if isinstance(x, GaussianRational) and isinstance(y, GaussianRational):
        return x == y
    return abs(complex(x) - complex(y)) <= tol * max(1.0, abs(complex(x)), abs(complex(y)))


@dataclass(frozen=True)
class EndpointTuple:
    """Endpoints a, b, c, d with the fixed role pattern of the degree."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    roles: RoleAssignment
    degenerate: bool = False

    @classmethod
    def create(cls, n: int, a: Any, b: Any, c: Any, d: Any, tol: float = 0.0) -> "EndpointTuple":
        points = _unify([a, b, c, d])
        degenerate = any(
            coincide(points[i], points[j], tol) for i in range(4) for j in range(i)
        )
        return cls(*points, roles=RoleAssignment.for_degree(n), degenerate=degenerate)

    @classmethod
    def from_labels(cls, n: int, values: Dict[str, Any], tol: float = 0.0) -> "EndpointTuple":
        return cls.create(n, *(values[label] for label in LABELS), tol=tol)

    @property
    def points(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    @property
    def mode(self) -> ScalarMode:
        return mode_of(self.a)

    def by_label(self) -> Dict[str, Scalar]:
        return dict(zip(LABELS, self.points))

    def H(self) -> Poly:
        """``(z-a)(z-b)(z-c)(z-d)``."""
        return Poly.from_roots(self.points, self.mode)

    def to_approx(self) -> "EndpointTuple":
        return EndpointTuple(
            *(complex(p) for p in self.points), roles=self.roles, degenerate=self.degenerate
        )

    def multiset_key(self, digits: int = 9) -> Tuple:
        """Order-free identity of the endpoint set (rounded in approximate mode)."""
        if self.mode is ScalarMode.EXACT:
            return tuple(sorted(scalar_key(p) for p in self.points))
        rounded = [complex(p) for p in self.points]
        return tuple(sorted((round(z.real, digits), round(z.imag, digits)) for z in rounded))

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {label: format_scalar(v) for label, v in self.by_label().items()}
        data["roles"] = self.roles.as_dict()
        data["degenerate"] = self.degenerate
        return data


def _unify(values: List[Any]) -> List[Scalar]:
    """All exact, or all complex when any value is approximate."""
    mode = ScalarMode.EXACT
    for v in values:
        if mode_of(v) is ScalarMode.APPROX:
            mode = ScalarMode.APPROX
    return [coerce(v, mode) for v in values]


@dataclass
class TnTupleSolution:
    """A validated tuple with its extremal points and the polynomials T_n, U_{n-2}."""

    n: int
    tuple: EndpointTuple
    xs: List[Scalar]
    ys: List[Scalar]
    T: Poly
    U: Poly
    pell_residual_norm: float = 0.0
    system_residual: float = 0.0
    points_exact: bool = True
    composed_from: Optional[int] = None

    @property
    def mode(self) -> ScalarMode:
        return self.T.mode

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n": self.n,
            "tuple": self.tuple.as_dict(),
            "xs": [format_scalar(x) for x in self.xs],
            "ys": [format_scalar(y) for y in self.ys],
            "T": poly_to_json(self.T),
            "U": poly_to_json(self.U),
            "residual_norm": self.pell_residual_norm,
            "system_residual": self.system_residual,
            "mode": self.mode.value,
        }
        if self.composed_from is not None:
            data["composed_from"] = self.composed_from
        return data


@dataclass
class Candidate:
    """One root of the endpoint polynomial and what validation made of it."""

    value: Scalar
    unknown: str
    tuple: EndpointTuple
    classification: Classification
    multiplicity: int = 1
    solution: Optional[TnTupleSolution] = None
    message: str = ""

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "value": format_scalar(self.value),
            "unknown": self.unknown,
            "multiplicity": self.multiplicity,
            "classification": self.classification.value,
            "validated": self.solution is not None,
            "tuple": self.tuple.as_dict(),
        }
        if self.message:
            data["message"] = self.message
        return data


@dataclass
class EndpointCandidates:
    """Result of solving for the fourth endpoint."""

    polynomial: Optional[Poly]
    candidates: List[Candidate] = field(default_factory=list)
    skipped_irrational: int = 0

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self) -> int:
        return len(self.candidates)

    def values(self) -> List[Scalar]:
        return [c.value for c in self.candidates]

    def validated(self) -> List[TnTupleSolution]:
        return [c.solution for c in self.candidates if c.solution is not None]


@dataclass(frozen=True)
class SolveOptions:
    """Tolerances and policies shared by the tuple pipeline."""

    tol: float = 1e-9
    pell_tol: float = 1e-9
    det_tol: float = 0.0
    seed: int = 0
    max_iter: int = 500
    max_denominator: int = 10**6
    promote: bool = False
    workers: int = 1
