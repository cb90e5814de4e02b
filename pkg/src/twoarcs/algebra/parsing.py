"""
Text syntax for scalars and polynomials.

Exact scalars are written ``[-]p/q`` or ``[-]p`` for rationals and
``R+Si`` / ``R-Si`` for Gaussian rationals (``-1/2``, ``3/4+1/3i``, ``i``).
Anything else that Python's ``complex`` understands (with ``i`` in place of
``j``) is read as an approximate value. Polynomials serialize as lists of
coefficient strings, low-to-high.
"""

import math
import re
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import GaussianRational, Scalar, ScalarMode, coerce
from twoarcs.utils.error_handler import ParseError

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_MAGNITUDE = re.compile(r"^\d+(?:/\d+)?$")


def _split_gaussian(text: str) -> Optional[tuple]:
    if not text.endswith("i"):
        return (text, "0") if _RATIONAL.match(text) else None
    body = text[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        re_text, im_text = body[:split], body[split:]
    else:
        re_text, im_text = "0", body
    if im_text in ("", "+"):
        im_text = "1"
    elif im_text == "-":
        im_text = "-1"
    if not _RATIONAL.match(re_text) or not _RATIONAL.match(im_text):
        return None
    return re_text, im_text


def parse_scalar(text: str) -> Scalar:
    """
    Parse one scalar.

    Args:
        text: Scalar text, e.g. ``-1/2``, ``3/4+1/3i`` or ``0.25-1.5i``

    Returns:
        ``GaussianRational`` for rational syntax, ``complex`` otherwise.

    Raises:
        ParseError: Malformed or non-finite input
    """
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise ParseError("empty scalar")
    parts = _split_gaussian(cleaned)
    if parts is not None:
        try:
            return GaussianRational(Fraction(parts[0]), Fraction(parts[1]))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {text!r}")
    try:
        value = complex(cleaned.replace("i", "j"))
    except ValueError:
        raise ParseError(f"cannot parse scalar {text!r}")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ParseError(f"non-finite scalar {text!r}")
    return value


def parse_scalar_list(text: str) -> List[Scalar]:
    """Comma-separated scalars; an empty string gives an empty list."""
    if not text.strip():
        return []
    return [parse_scalar(part) for part in text.split(",")]


def format_scalar(x: Any) -> str:
    """Inverse of ``parse_scalar``: rational syntax or 17 significant digits."""
    if isinstance(x, (GaussianRational, int, Fraction)):
        return str(coerce(x, ScalarMode.EXACT))
    c = complex(x)
    return f"{c.real:.17g}{c.imag:+.17g}i"


def format_real(x: Optional[float]) -> Optional[str]:
    """17 significant digits; None passes through."""
    if x is None:
        return None
    return f"{float(x):.17g}"


def all_exact(values: Iterable[Any]) -> bool:
    return all(isinstance(v, (GaussianRational, int, Fraction)) for v in values)


def poly_to_json(p: Poly) -> List[str]:
    return [format_scalar(c) for c in p.coeffs]


def poly_from_json(coeffs: Sequence[Any]) -> Poly:
    """Polynomial from a coefficient list (strings or numbers), low-to-high."""
    values: List[Scalar] = []
    for c in coeffs:
        if isinstance(c, str):
            values.append(parse_scalar(c))
        elif isinstance(c, bool) or not isinstance(c, (int, float)):
            raise ParseError(f"bad coefficient {c!r}")
        elif isinstance(c, int):
            values.append(GaussianRational(c))
        else:
            values.append(parse_scalar(repr(c)))
    mode = ScalarMode.EXACT if all_exact(values) else ScalarMode.APPROX
    return Poly(values, mode)
