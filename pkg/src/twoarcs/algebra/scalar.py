"""
Scalars: exact Gaussian rationals and approximate complex numbers.

Exact values are ``GaussianRational`` instances (a pair of ``Fraction``);
approximate values are builtin ``complex``. Arithmetic between the two
promotes to ``complex`` unless an ``exact_context()`` is active, in which
case the promotion is refused with ``ModeMismatchError``.
"""

import math
from contextlib import contextmanager
from contextvars import ContextVar
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterator, Union

from twoarcs.utils.error_handler import ExactnessError, ModeMismatchError

_STRICT_EXACT: ContextVar[bool] = ContextVar("twoarcs_strict_exact", default=False)


class ScalarMode(str, Enum):
    """Coefficient domain of a value."""

    EXACT = "exact"
    APPROX = "approx"


@contextmanager
def exact_context() -> Iterator[None]:
    """Refuse exact -> approx promotion inside the block."""
    token = _STRICT_EXACT.set(True)
    try:
        yield
    finally:
        _STRICT_EXACT.reset(token)


def in_exact_context() -> bool:
    return _STRICT_EXACT.get()


class GaussianRational:
    """
    Exact complex number ``re + im*i`` with rational parts.

    ``Fraction`` keeps both parts in lowest terms with positive denominators.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        if isinstance(re, float) or isinstance(im, float):
            raise ModeMismatchError("GaussianRational parts must be rational, got a float")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # ------------------------------------------------------------------
    # coercion

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return GaussianRational._make(Fraction(other), _ZERO)
        if isinstance(other, (float, complex)):
            if _STRICT_EXACT.get():
                raise ModeMismatchError(
                    "exact value combined with an approximate one inside an exact pipeline"
                )
            return complex(other)
        return NotImplemented

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: Any) -> Any:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(o, complex):
            return complex(self) + o
        return GaussianRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Any:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(o, complex):
            return complex(self) - o
        return GaussianRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> Any:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(o, complex):
            return o - complex(self)
        return GaussianRational._make(o.re - self.re, o.im - self.im)

    def __mul__(self, other: Any) -> Any:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(o, complex):
            return complex(self) * o
        if not self.im and not o.im:
            return GaussianRational._make(self.re * o.re, _ZERO)
        return GaussianRational._make(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Any:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(o, complex):
            return complex(self) / o
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> Any:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if isinstance(o, complex):
            return o / complex(self)
        return o * self.inverse()

    def inverse(self) -> "GaussianRational":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("division by exact zero")
            return GaussianRational._make(1 / self.re, _ZERO)
        n = self.norm2()
        return GaussianRational._make(self.re / n, -self.im / n)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __pow__(self, k: int) -> "GaussianRational":
        if not isinstance(k, int):
            raise TypeError("GaussianRational powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(float(self.re), float(self.im))

    # ------------------------------------------------------------------
    # comparison and conversion

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def sort_key(self) -> tuple:
        return (self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{_imag_text(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_text(abs(self.im))}i"


def _imag_text(v: Fraction) -> str:
    if v == 1:
        return ""
    if v == -1:
        return "-"
    return str(v)


_ZERO = Fraction(0)
ZERO = GaussianRational._make(Fraction(0), Fraction(0))
ONE = GaussianRational._make(Fraction(1), Fraction(0))
I = GaussianRational._make(Fraction(0), Fraction(1))

Scalar = Union[GaussianRational, complex]


def mode_of(x: Any) -> ScalarMode:
    """Mode of a single scalar; ints and Fractions count as exact."""
    if isinstance(x, (GaussianRational, int, Fraction)):
        return ScalarMode.EXACT
    if isinstance(x, (float, complex)):
        return ScalarMode.APPROX
    raise TypeError(f"not a scalar: {x!r}")


def to_exact(x: Any) -> GaussianRational:
    """Convert an exact-valued number to ``GaussianRational``; floats are refused."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return GaussianRational._make(Fraction(x), _ZERO)
    raise ExactnessError(f"{x!r} is not a Gaussian rational")


def to_approx(x: Any) -> complex:
    return complex(x)


def coerce(x: Any, mode: ScalarMode) -> Scalar:
    """Bring ``x`` into ``mode``; exact targets never accept approximate input."""
    if mode is ScalarMode.EXACT:
        return to_exact(x)
    return complex(x)


def scalar_key(x: Scalar) -> tuple:
    """Sort key ordering by (real part, imaginary part)."""
    if isinstance(x, GaussianRational):
        return (float(x.re), float(x.im), x.re, x.im)
    c = complex(x)
    return (c.real, c.imag)


def is_zero(x: Scalar, tol: float = 0.0) -> bool:
    if isinstance(x, GaussianRational):
        return not x
    return abs(x) <= tol
