"""
Unit tests for scalars, polynomials and polynomial matrices.
"""

from fractions import Fraction

import pytest

from twoarcs.algebra import (
    GaussianRational,
    Poly,
    PolyMat,
    ScalarMode,
    exact_context,
    format_scalar,
    parse_scalar,
    parse_scalar_list,
    poly_from_json,
    poly_interpolate,
    poly_to_json,
    polymat_det,
)
from twoarcs.utils.error_handler import ModeMismatchError, ParseError


class TestParsing:
    """Tests for the scalar text syntax."""

    def test_rational(self):
        """Test rationals parse exactly."""
        assert parse_scalar("-1/2") == GaussianRational(Fraction(-1, 2))
        assert parse_scalar("7") == GaussianRational(7)

    def test_gaussian_rational(self):
        """Test Gaussian rationals with explicit and implicit imaginary units."""
        assert parse_scalar("3/4+1/3i") == GaussianRational(Fraction(3, 4), Fraction(1, 3))
        assert parse_scalar("i") == GaussianRational(0, 1)
        assert parse_scalar("-i") == GaussianRational(0, -1)
        assert parse_scalar("2-i") == GaussianRational(2, -1)

    def test_decimal_is_approximate(self):
        """Test decimals come back as complex."""
        value = parse_scalar("0.25-1.5i")
        assert isinstance(value, complex)
        assert value == complex(0.25, -1.5)

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "inf", "1/2/3"])
    def test_malformed(self, text):
        """Test malformed input raises ParseError."""
        with pytest.raises(ParseError):
            parse_scalar(text)

    def test_list(self):
        """Test comma-separated lists."""
        assert parse_scalar_list("-1, 1/2,1/2") == [
            GaussianRational(-1),
            GaussianRational(Fraction(1, 2)),
            GaussianRational(Fraction(1, 2)),
        ]
        assert parse_scalar_list("  ") == []

    def test_format_is_inverse(self):
        """Test exact values survive format -> parse."""
        for value in (
            GaussianRational(Fraction(3, 4), Fraction(1, 3)),
            GaussianRational(0, -1),
            GaussianRational(Fraction(-22, 5)),
        ):
            assert parse_scalar(format_scalar(value)) == value

    def test_poly_json(self):
        """Test coefficient lists in JSON form."""
        p = Poly([Fraction(-1, 2), 0, 3])
        assert poly_to_json(p) == ["-1/2", "0", "3"]
        assert poly_from_json(["-1/2", 0, "3"]) == p
        assert poly_from_json([0.5, 1]).mode is ScalarMode.APPROX
        with pytest.raises(ParseError):
            poly_from_json([True])


class TestGaussianRational:
    """Tests for exact complex arithmetic."""

    def test_arithmetic(self):
        """Test field operations stay exact."""
        u = GaussianRational(1, 1)
        v = GaussianRational(1, -1)
        assert u * v == 2
        assert u / u == 1
        assert (u + v) == 2
        assert u**2 == GaussianRational(0, 2)
        assert u.inverse() == GaussianRational(Fraction(1, 2), Fraction(-1, 2))

    def test_division_by_zero(self):
        """Test exact zero division raises."""
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)

    def test_float_parts_refused(self):
        """Test float parts are rejected."""
        with pytest.raises(ModeMismatchError):
            GaussianRational(0.5)

    def test_promotion(self):
        """Test exact + approximate promotes, except inside exact_context."""
        assert GaussianRational(1) + 0.5 == complex(1.5)
        with exact_context():
            with pytest.raises(ModeMismatchError):
                GaussianRational(1) + 0.5


class TestPoly:
    """Tests for dense polynomials."""

    def test_trim_and_degree(self):
        """Test trailing zeros are trimmed."""
        p = Poly([1, 2, 0, 0])
        assert p.degree == 1
        assert Poly([]).degree == -1
        assert Poly([0, 0]).is_zero

    def test_arithmetic(self):
        """Test ring operations."""
        z = Poly.monomial()
        assert (z - 1) * (z + 1) == Poly([-1, 0, 1])
        assert (z + 1) ** 3 == Poly([1, 3, 3, 1])
        assert 2 * z - 1 == Poly([-1, 2])

    def test_divrem(self):
        """Test Euclidean division."""
        q, r = Poly([-1, 0, 1]).divrem(Poly([-1, 1]))
        assert q == Poly([1, 1])
        assert r.is_zero
        q, r = Poly([1, 0, 1]).divrem(Poly([-1, 1]))
        assert r == Poly([2])
        with pytest.raises(ArithmeticError):
            Poly([1, 0, 1]).exact_quotient(Poly([-1, 1]))

    def test_evaluation_and_composition(self):
        """Test Horner evaluation and composition."""
        p = Poly([1, 2, 3])
        assert p(2) == 17
        assert p(Fraction(1, 2)) == Fraction(11, 4)
        assert Poly([-1, 0, 2]).compose(Poly([0, 1])) == Poly([-1, 0, 2])
        assert Poly([0, 0, 1])(Poly([1, 1])) == Poly([1, 2, 1])

    def test_scale_argument(self):
        """Test p(lam * z) by coefficient scaling agrees with composition."""
        p = Poly([1, 2, 3])
        half = Fraction(1, 2)
        assert p.scale_argument(2) == Poly([1, 4, 12])
        assert p.scale_argument(half) == p(Poly([0, half]))
        assert p.scale_argument(GaussianRational(0, 1)) == Poly([1, GaussianRational(0, 2), -3])

    def test_derivative(self):
        """Test formal derivative."""
        assert Poly([0, -3, 0, 4]).derivative() == Poly([-3, 0, 12])
        assert Poly([0, -3, 0, 4]).derivative(2) == Poly([0, 24])

    def test_from_roots(self):
        """Test construction from roots."""
        assert Poly.from_roots([1, -1]) == Poly([-1, 0, 1])
        assert Poly.from_roots([], lead=4) == Poly([4])

    def test_mode_mismatch(self):
        """Test exact and approximate polynomials do not mix."""
        with pytest.raises(ModeMismatchError):
            Poly([1, 1]) + Poly([1.0, 1.0])

    def test_chop(self):
        """Test numerically zero leading coefficients are dropped."""
        p = Poly([1.0, 2.0, 1e-15])
        assert p.chop(1e-12).degree == 1
        exact = Poly([1, 2, Fraction(1, 10**15)])
        assert exact.chop(1e-12) == exact

    def test_is_proportional(self):
        """Test exact proportionality."""
        assert Poly([2, 4]).is_proportional(Poly([-1, -2]))
        assert not Poly([2, 4]).is_proportional(Poly([1, 3]))


class TestInterpolation:
    """Tests for polynomial interpolation."""

    def test_exact(self):
        """Test exact divided differences."""
        p = poly_interpolate([(0, 1), (1, 2), (2, 5)])
        assert p == Poly([1, 0, 1])

    def test_approximate(self):
        """Test approximate Vandermonde solve."""
        p = poly_interpolate([(0.0, 1.0), (1.0, 2.0), (2.0, 5.0)])
        assert p.is_close(Poly([1.0, 0.0, 1.0]), 1e-12)

    def test_duplicate_points(self):
        """Test duplicate nodes are rejected."""
        with pytest.raises(ValueError):
            poly_interpolate([(1, 1), (1, 2)])


class TestPolyMatDeterminant:
    """Tests for polynomial matrix determinants."""

    def _tridiagonal(self, mode):
        z = Poly.monomial(1, 1, mode)
        one = Poly.one(mode)
        zero = Poly.zero(mode)
        return PolyMat.from_rows([[z, one, zero], [one, z, one], [zero, one, z]], mode)

    def test_exact_bareiss(self):
        """Test fraction-free elimination."""
        det = polymat_det(self._tridiagonal(ScalarMode.EXACT))
        assert det == Poly([0, -2, 0, 1])

    def test_approximate_interpolation(self):
        """Test evaluation-interpolation determinant."""
        mat = self._tridiagonal(ScalarMode.APPROX)
        det = polymat_det(mat, degree_bound=mat.degree_bound())
        assert det.degree == 3
        assert det.is_close(Poly([0.0, -2.0, 0.0, 1.0]), 1e-10)

    def test_two_by_two(self):
        """Test the direct 2x2 formula."""
        z = Poly.monomial()
        mat = PolyMat.from_rows([[z, Poly.one()], [Poly.one(), z]])
        assert polymat_det(mat) == Poly([-1, 0, 1])

    def test_empty_matrix(self):
        """Test the empty determinant is one."""
        assert polymat_det(PolyMat(0, 0, [], ScalarMode.EXACT)) == Poly.one()

    def test_non_square(self):
        """Test non-square matrices are rejected."""
        with pytest.raises(ValueError):
            polymat_det(PolyMat(1, 2, [1, 2], ScalarMode.EXACT))
