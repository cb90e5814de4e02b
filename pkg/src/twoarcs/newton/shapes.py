"""
System shapes: degree, parity, (nu, mu) and the power-sum variant.

Endpoints are always labelled ``a, b, c, d`` with fixed roles: for odd
degree T_n(a) = T_n(b) = T_n(c) = -1 and T_n(d) = +1; for even degree
T_n(a) = T_n(b) = -1 and T_n(c) = T_n(d) = +1.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Tuple

LABELS: Tuple[str, ...] = ("a", "b", "c", "d")


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls.ODD if n % 2 else cls.EVEN


class Variant(str, Enum):
    """Which unknowns sit on the v-side of the power-sum system."""

    ODD_ENDPOINT = "odd_endpoint"
    ODD_Y = "odd_y"
    ODD_X = "odd_x"
    EVEN_ENDPOINT = "even_endpoint"
    EVEN_Y = "even_y"
    EVEN_X = "even_x"

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.value.startswith("odd") else Parity.EVEN


# signs of a, b, c, d in s_k = 1/2 * sum(sign * e**k)
SIGNS: Dict[Variant, Tuple[int, int, int, int]] = {
    Variant.ODD_ENDPOINT: (-1, -1, -1, -1),
    Variant.ODD_Y: (1, 1, 1, 1),
    Variant.ODD_X: (1, -1, -1, 1),
    Variant.EVEN_ENDPOINT: (-1, 1, -1, -1),
    Variant.EVEN_Y: (1, 1, 1, -1),
    Variant.EVEN_X: (1, -1, 1, 1),
}

# endpoint that joins the unknowns: v-side for *_ENDPOINT, u-side otherwise
DISTINGUISHED: Dict[Variant, str] = {
    Variant.ODD_ENDPOINT: "d",
    Variant.ODD_Y: "d",
    Variant.ODD_X: "a",
    Variant.EVEN_ENDPOINT: "a",
    Variant.EVEN_Y: "c",
    Variant.EVEN_X: "a",
}


def half_degree(n: int) -> int:
    """m with n = 2m+1 (odd) or n = 2m+2 (even)."""
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    return (n - 1) // 2 if n % 2 else (n - 2) // 2


def _nu_mu(variant: Variant, m: int) -> Tuple[int, int]:
    return {
        Variant.ODD_ENDPOINT: (m - 1, m + 1),
        Variant.ODD_Y: (m + 1, m - 1),
        Variant.ODD_X: (m, m),
        Variant.EVEN_ENDPOINT: (m, m + 1),
        Variant.EVEN_Y: (m + 1, m),
        Variant.EVEN_X: (m + 1, m),
    }[variant]


@dataclass(frozen=True)
class SystemShape:
    """Degree, parity, (nu, mu) and power-sum variant of one power-sum system."""

    n: int
    parity: Parity
    m: int
    variant: Variant
    nu: int
    mu: int

    @classmethod
    def create(cls, n: int, variant: Variant) -> "SystemShape":
        parity = Parity.of(n)
        if variant.parity is not parity:
            raise ValueError(f"variant {variant.value} does not fit degree {n}")
        m = half_degree(n)
        nu, mu = _nu_mu(variant, m)
        return cls(n, parity, m, variant, nu, mu)

    @property
    def equations(self) -> int:
        """Number of power sums the system uses (nu + mu)."""
        return self.nu + self.mu

    @property
    def signs(self) -> Tuple[int, int, int, int]:
        return SIGNS[self.variant]

    @property
    def distinguished(self) -> str:
        return DISTINGUISHED[self.variant]


def endpoint_variant(n: int) -> Variant:
    return Variant.ODD_ENDPOINT if n % 2 else Variant.EVEN_ENDPOINT


def y_variant(n: int) -> Variant:
    return Variant.ODD_Y if n % 2 else Variant.EVEN_Y


def x_variant(n: int) -> Variant:
    return Variant.ODD_X if n % 2 else Variant.EVEN_X


@dataclass(frozen=True)
class RoleAssignment:
    """Endpoint labels where T_n = -1 and where T_n = +1."""

    minus_endpoints: FrozenSet[str]
    plus_endpoints: FrozenSet[str]

    def __post_init__(self) -> None:
        if self.minus_endpoints & self.plus_endpoints:
            raise ValueError("an endpoint cannot carry both roles")
        if self.minus_endpoints | self.plus_endpoints != set(LABELS):
            raise ValueError("roles must cover a, b, c, d")

    @classmethod
    def for_degree(cls, n: int) -> "RoleAssignment":
        if n % 2:
            return cls(frozenset("abc"), frozenset("d"))
        return cls(frozenset("ab"), frozenset("cd"))

    def fits(self, n: int) -> bool:
        expected = (3, 1) if n % 2 else (2, 2)
        return (len(self.minus_endpoints), len(self.plus_endpoints)) == expected

    def as_dict(self) -> Dict[str, list]:
        return {"minus": sorted(self.minus_endpoints), "plus": sorted(self.plus_endpoints)}


def role_counts(n: int) -> Tuple[int, int]:
    """(number of minus endpoints, number of plus endpoints)."""
    return (3, 1) if n % 2 else (2, 2)
