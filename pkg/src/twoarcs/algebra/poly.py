"""
Dense univariate polynomials over exact or approximate scalars.

Coefficients are stored low-to-high (index i is the coefficient of z**i).
Trailing zeros are trimmed after every operation, so the zero polynomial is
the empty tuple and structural equality is polynomial equality.
"""

import cmath
import math
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from twoarcs.algebra.scalar import (
    ONE,
    GaussianRational,
    Scalar,
    ScalarMode,
    coerce,
    mode_of,
)
from twoarcs.utils.error_handler import ModeMismatchError


def _trim(coeffs: List[Scalar]) -> Tuple[Scalar, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _infer_mode(values: Sequence[Any]) -> ScalarMode:
    for v in values:
        if mode_of(v) is ScalarMode.APPROX:
            return ScalarMode.APPROX
    return ScalarMode.EXACT


class Poly:
    """Immutable dense polynomial."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs: Iterable[Any] = (), mode: Optional[ScalarMode] = None):
        values = list(coeffs)
        if mode is None:
            mode = _infer_mode(values)
        self.mode = mode
        self.coeffs = _trim([coerce(v, mode) for v in values])

    @classmethod
    def _raw(cls, coeffs: List[Scalar], mode: ScalarMode) -> "Poly":
        obj = object.__new__(cls)
        obj.mode = mode
        obj.coeffs = _trim(coeffs)
        return obj

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, mode: ScalarMode = ScalarMode.EXACT) -> "Poly":
        return cls._raw([], mode)

    @classmethod
    def one(cls, mode: ScalarMode = ScalarMode.EXACT) -> "Poly":
        return cls.constant(1, mode)

    @classmethod
    def constant(cls, c: Any, mode: Optional[ScalarMode] = None) -> "Poly":
        return cls([c], mode)

    @classmethod
    def monomial(cls, k: int = 1, c: Any = 1, mode: ScalarMode = ScalarMode.EXACT) -> "Poly":
        """``c * z**k``; the default is the monomial z."""
        unit = _unit(mode)
        return cls._raw([unit * 0] * k + [coerce(c, mode)], mode)

    @classmethod
    def from_roots(
        cls, roots: Iterable[Any], mode: ScalarMode = ScalarMode.EXACT, lead: Any = 1
    ) -> "Poly":
        """``lead * prod(z - r)``."""
        result = cls.constant(lead, mode)
        for r in roots:
            result = result * cls._raw([-coerce(r, mode), _unit(mode)], mode)
        return result

    # ------------------------------------------------------------------
    # basic properties

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        if not self.coeffs:
            return _unit(self.mode) * 0
        return self.coeffs[-1]

    def coefficient(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _unit(self.mode) * 0

    def norm_inf(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # ------------------------------------------------------------------
    # arithmetic

    def _other(self, other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.mode is not self.mode:
                raise ModeMismatchError(
                    f"cannot combine {self.mode.value} and {other.mode.value} polynomials"
                )
            return other
        if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
            return Poly._raw([coerce(other, self.mode)], self.mode)
        return None

    def __add__(self, other: Any) -> "Poly":
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out, self.mode)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw([-c for c in self.coeffs], self.mode)

    def __sub__(self, other: Any) -> "Poly":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Poly":
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
                c = coerce(other, self.mode)
                return Poly._raw([x * c for x in self.coeffs], self.mode)
            return NotImplemented
        o = self._other(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw([], self.mode)
        zero = a[0] * 0
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._raw(out, self.mode)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Poly":
        """Division by a scalar."""
        if isinstance(other, Poly):
            if other.degree == 0:
                other = other.coeffs[0]
            else:
                return NotImplemented
        c = coerce(other, self.mode)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        inv = 1 / c
        return Poly._raw([x * inv for x in self.coeffs], self.mode)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.mode)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divrem(self, divisor: "Poly") -> Tuple["Poly", "Poly"]:
        """Euclidean division: ``self = divisor * q + r`` with deg r < deg divisor."""
        d = self._other(divisor)
        if d is None or d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) <= dd:
            return Poly._raw([], self.mode), self
        inv_lead = 1 / d.coeffs[-1]
        zero = d.coeffs[-1] * 0
        quot = [zero] * (len(rem) - dd)
        for k in range(len(rem) - dd - 1, -1, -1):
            q = rem[k + dd] * inv_lead
            quot[k] = q
            if q:
                for j, c in enumerate(d.coeffs):
                    rem[k + j] = rem[k + j] - q * c
            rem[k + dd] = zero
        return Poly._raw(quot, self.mode), Poly._raw(rem[:dd], self.mode)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divrem(other)[1]

    def exact_quotient(self, divisor: "Poly") -> "Poly":
        """Quotient of a division known to be exact (exact mode only)."""
        q, r = self.divrem(divisor)
        if not r.is_zero:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # ------------------------------------------------------------------
    # calculus and evaluation

    def derivative(self, order: int = 1) -> "Poly":
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [c * i for i, c in enumerate(coeffs)][1:]
        return Poly._raw(coeffs, self.mode)

    def __call__(self, x: Any) -> Any:
        """Horner evaluation, highest coefficient first."""
        if isinstance(x, Poly):
            return self.compose(x)
        if self.mode is ScalarMode.EXACT:
            x = coerce(x, ScalarMode.EXACT) if not isinstance(x, (float, complex)) else x
        acc: Any = self.leading * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(z))`` by Horner's scheme."""
        o = self._other(inner)
        acc = Poly._raw([], self.mode)
        for c in reversed(self.coeffs):
            acc = acc * o + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return self / self.leading

    def chop(self, rel_tol: float) -> "Poly":
        """Drop leading coefficients below ``rel_tol * norm_inf`` (approximate mode only)."""
        if self.mode is ScalarMode.EXACT or self.is_zero:
            return self
        cutoff = rel_tol * self.norm_inf()
        coeffs = list(self.coeffs)
        while coeffs and abs(coeffs[-1]) <= cutoff:
            coeffs.pop()
        return Poly._raw(coeffs, self.mode)

    def reverse(self) -> "Poly":
        """``z**deg * self(1/z)``."""
        return Poly._raw(list(reversed(self.coeffs)), self.mode)

    def scale_argument(self, lam: Any) -> "Poly":
        """``self(lam * z)``."""
        lam = coerce(lam, self.mode)
        out = []
        power = _unit(self.mode)
        for c in self.coeffs:
            out.append(c * power)
            power = power * lam
        return Poly._raw(out, self.mode)

    # ------------------------------------------------------------------
    # modes and comparisons

    def to_approx(self) -> "Poly":
        return Poly._raw([complex(c) for c in self.coeffs], ScalarMode.APPROX)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self.mode is other.mode and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
            if not other:
                return self.is_zero
            return self.degree == 0 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.mode, self.coeffs))

    def is_close(self, other: "Poly", tol: float) -> bool:
        """Coefficient-wise closeness relative to the larger infinity norm."""
        scale = max(1.0, self.norm_inf(), other.norm_inf())
        diff = self.to_approx() - other.to_approx()
        return diff.norm_inf() <= tol * scale

    def is_proportional(self, other: "Poly") -> bool:
        """True when ``self = c * other`` for a nonzero scalar c (exact test)."""
        if self.is_zero or other.is_zero:
            return False
        if self.degree != other.degree:
            return False
        return self * other.leading == other * self.leading

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}], {self.mode.value})"


def _unit(mode: ScalarMode) -> Scalar:
    return ONE if mode is ScalarMode.EXACT else complex(1.0)


def circle_nodes(count: int, radius: float = 1.0, center: complex = 0j) -> List[complex]:
    """Equally spaced points on a circle (roots of unity scaled and shifted)."""
    return [center + radius * cmath.exp(2j * math.pi * k / count) for k in range(count)]


def chebyshev_nodes(count: int, lo: float = -1.0, hi: float = 1.0) -> List[float]:
    """Chebyshev points of the first kind on [lo, hi], ascending."""
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    return [mid - half * math.cos(math.pi * (2 * k + 1) / (2 * count)) for k in range(count)]


def poly_interpolate(samples: Sequence[Tuple[Any, Any]], mode: Optional[ScalarMode] = None) -> Poly:
    """
    Polynomial of degree < len(samples) through all ``(point, value)`` samples.

    Exact samples use Newton divided differences in Gaussian-rational
    arithmetic; approximate samples solve the Vandermonde system with numpy.
    """
    if not samples:
        return Poly.zero(mode or ScalarMode.EXACT)
    if mode is None:
        mode = _infer_mode([v for pair in samples for v in pair])
    points = [coerce(p, mode) for p, _ in samples]
    values = [coerce(v, mode) for _, v in samples]
    if len(set(points)) != len(points):
        raise ValueError("duplicate interpolation points")

    if mode is ScalarMode.APPROX:
        vander = np.vander(np.array(points, dtype=complex), increasing=True)
        coeffs = np.linalg.solve(vander, np.array(values, dtype=complex))
        return Poly._raw([complex(c) for c in coeffs], ScalarMode.APPROX)

    # Newton divided differences, in place
    n = len(points)
    diffs = list(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            diffs[i] = (diffs[i] - diffs[i - 1]) / (points[i] - points[i - level])
    result = Poly._raw([diffs[-1]], mode)
    for i in range(n - 2, -1, -1):
        result = result * Poly._raw([-points[i], ONE], mode) + diffs[i]
    return result
