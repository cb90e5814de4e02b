"""
Unit tests for the simultaneous root finder.
"""

import math
from fractions import Fraction

import pytest

from twoarcs.algebra import GaussianRational, Poly
from twoarcs.rootfind import all_roots, exact_roots, real_roots_in


class TestAllRoots:
    """Tests for all_roots."""

    def test_simple_roots(self):
        """Test roots of z**2 - 1 come back sorted."""
        found = all_roots(Poly([-1, 0, 1]))
        assert found.converged
        values = found.values()
        assert len(values) == 2
        assert values[0] == pytest.approx(-1.0, abs=1e-12)
        assert values[1] == pytest.approx(1.0, abs=1e-12)

    def test_complex_roots(self):
        """Test roots of z**2 + 1."""
        values = all_roots(Poly([1.0, 0.0, 1.0])).values()
        assert values[0] == pytest.approx(-1j, abs=1e-12)
        assert values[1] == pytest.approx(1j, abs=1e-12)

    def test_multiplicity(self):
        """Test a double root is reported once with multiplicity 2."""
        found = all_roots(Poly.from_roots([1, 1, -2]))
        assert [r.multiplicity for r in found.roots] == [1, 2]
        assert found.roots[1].value == pytest.approx(1.0, abs=1e-6)
        assert len(found.values()) == 3

    def test_roots_at_zero(self):
        """Test exact zero roots are split off."""
        found = all_roots(Poly([0, 0, -1, 1]))
        assert found.roots[0].value == 0j
        assert found.roots[0].multiplicity == 2
        assert found.roots[1].value == pytest.approx(1.0, abs=1e-12)

    def test_numerically_zero_leading_coefficient(self):
        """Test a negligible top coefficient is dropped."""
        found = all_roots(Poly([-1.0, 0.0, 1.0, 1e-20]))
        assert found.degree == 2
        assert len(found.values()) == 2

    def test_warm_start(self):
        """Test warm starts converge to the same roots."""
        p = Poly([0, -3, 0, 4])
        cold = all_roots(p).values()
        warm = all_roots(p, initial=[-0.8, 0.1, 0.8]).values()
        for a, b in zip(cold, warm):
            assert a == pytest.approx(b, abs=1e-10)

    def test_constant_rejected(self):
        """Test constants have no roots to find."""
        with pytest.raises(ValueError):
            all_roots(Poly([3]))

    def test_real_roots_in(self):
        """Test real root filtering by interval."""
        roots = real_roots_in(Poly([-2, 0, 1]), 0.0, math.inf)
        assert roots == [pytest.approx(math.sqrt(2), abs=1e-12)]
        assert real_roots_in(Poly([1, 0, 1]), -10.0, 10.0) == []


class TestExactRoots:
    """Tests for exact_roots."""

    def test_rational_and_gaussian_roots(self):
        """Test rational and Gaussian-rational roots are split off exactly."""
        p = Poly.from_roots([Fraction(1, 2), Fraction(1, 2), -3]) * Poly([1, 0, 1])
        found = exact_roots(p)
        assert found.complete
        values = dict(found.roots)
        assert values[GaussianRational(-3)] == 1
        assert values[GaussianRational(Fraction(1, 2))] == 2
        assert values[GaussianRational(0, 1)] == 1
        assert values[GaussianRational(0, -1)] == 1

    def test_irrational_remainder(self):
        """Test irrational roots stay in the remainder."""
        p = Poly.from_roots([Fraction(1, 2), -3]) * Poly([-2, 0, 1])
        found = exact_roots(p)
        assert not found.complete
        assert found.roots == [(GaussianRational(-3), 1), (GaussianRational(Fraction(1, 2)), 1)]
        assert found.remainder.is_proportional(Poly([-2, 0, 1]))

    def test_linear(self):
        """Test the linear shortcut."""
        found = exact_roots(Poly([3, 2]))
        assert found.roots == [(GaussianRational(Fraction(-3, 2)), 1)]

    def test_approximate_input_rejected(self):
        """Test exact extraction needs an exact polynomial."""
        with pytest.raises(ValueError):
            exact_roots(Poly([1.0, 1.0, 1.0]))
