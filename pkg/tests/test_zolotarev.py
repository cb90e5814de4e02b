"""
Unit tests for the Zolotarev problem.
"""

import math
from fractions import Fraction

import pytest

from twoarcs.algebra import Poly, ScalarMode
from twoarcs.zolotarev import (
    Regime,
    ZolotarevOptions,
    alpha_bracket,
    alpha_is_resultant_root,
    build_Zn,
    chebyshev_regime_solution,
    resultant_alpha_polynomial,
    sigma_threshold,
    solve_alpha_beta,
    solve_zolotarev,
    verify_equioscillation,
    vieta_residual,
    zolotarev_residuals,
)
from twoarcs.utils.error_handler import ExactnessError, NoSolutionError

# n=3, sigma=2/3: alpha=2, beta=(2+2*sqrt(7))/3
BETA_3 = (2 + 2 * math.sqrt(7)) / 3


class TestThreshold:
    """Tests for the regime boundary and the alpha bracket."""

    def test_sigma_threshold(self):
        """Test tan(pi/(2n))**2 for small n."""
        assert sigma_threshold(2) == pytest.approx(1.0)
        assert sigma_threshold(3) == pytest.approx(1 / 3)
        with pytest.raises(ValueError):
            sigma_threshold(1)

    def test_alpha_bracket(self):
        """Test the bracket contains the known alpha."""
        lo, hi = alpha_bracket(2, 1.5)
        assert lo < 2.0 < hi
        lo, hi = alpha_bracket(3, 2 / 3)
        assert lo < 2.0 < hi
        assert lo > 1.0

    def test_vieta_residual(self):
        """Test the Vieta relation without y-points."""
        assert vieta_residual(2, 1.5, 2.0, []) == pytest.approx(0.0)
        assert vieta_residual(3, 2 / 3, 2.0, []) == pytest.approx(0.0)

    def test_residuals_vanish_at_solution(self):
        """Test both scaled residuals at known solutions."""
        p1, p2 = zolotarev_residuals(2, 1.5, 2.0, 4.0)
        assert p1 == pytest.approx(0.0, abs=1e-12)
        assert p2 == pytest.approx(0.0, abs=1e-12)
        p1, p2 = zolotarev_residuals(3, 2 / 3, 2.0, BETA_3)
        assert p1 == pytest.approx(0.0, abs=1e-10)
        assert p2 == pytest.approx(0.0, abs=1e-10)

    def test_residual_off_solution(self):
        """Test P2 detects a wrong alpha."""
        _, p2 = zolotarev_residuals(2, 1.5, 2.5, 4.5)
        assert p2 > 1e-3


class TestSolve:
    """Tests for solving (alpha, beta) and building Z_n."""

    def test_degree_two(self):
        """Test Z_2 = x**2 - 3x - 1 for sigma = 3/2."""
        solution = solve_zolotarev(2, 1.5)
        assert solution.regime is Regime.TWO_ARCS
        assert solution.alpha == pytest.approx(2.0, abs=1e-9)
        assert solution.beta == pytest.approx(4.0, abs=1e-9)
        assert solution.L == pytest.approx(3.0, abs=1e-9)
        assert solution.Z.is_close(Poly([-1.0, -3.0, 1.0], ScalarMode.APPROX), 1e-8)
        assert solution.equioscillation.ok

    def test_degree_three(self):
        """Test the n=3 solution and its x-point."""
        solution = solve_zolotarev(3, 2 / 3)
        assert solution.alpha == pytest.approx(2.0, abs=1e-9)
        assert solution.beta == pytest.approx(BETA_3, abs=1e-9)
        assert solution.xs == [pytest.approx((2 - BETA_3) / 2, abs=1e-8)]
        assert solution.ys == []
        assert solution.coefficient_error == pytest.approx(0.0, abs=1e-9)
        assert solution.equioscillation == (3, 2, True)

    def test_alpha_beta_only(self):
        """Test the solver alone."""
        alpha, beta = solve_alpha_beta(2, 1.5, ZolotarevOptions(scan_points=16))
        assert (alpha, beta) == (pytest.approx(2.0, abs=1e-9), pytest.approx(4.0, abs=1e-9))

    def test_chebyshev_regime_rejected(self):
        """Test sigma at or below the threshold has no two-arc solution."""
        with pytest.raises(NoSolutionError):
            solve_alpha_beta(3, 0.2)
        with pytest.raises(NoSolutionError):
            solve_zolotarev(2, 1.0)

    def test_chebyshev_regime(self):
        """Test the shifted Chebyshev polynomial below the threshold."""
        solution = solve_zolotarev(3, 0.2, allow_chebyshev=True)
        assert solution.regime is Regime.CHEBYSHEV
        assert solution.alpha is None and solution.beta is None
        assert solution.L == pytest.approx(1.2**3 / 4)
        assert len(solution.xs) == 2 and len(solution.ys) == 2
        assert complex(solution.Z.leading).real == pytest.approx(1.0)
        assert solution.coefficient_error == pytest.approx(0.0, abs=1e-12)
        assert max(solution.xs) == pytest.approx(1.4)

    def test_chebyshev_regime_direct(self):
        """Test chebyshev_regime_solution does not consult the threshold."""
        solution = chebyshev_regime_solution(2, 0.5)
        assert solution.L == pytest.approx(1.5**2 / 2)
        assert solution.as_dict()["alpha"] is None

    def test_build_from_known_pair(self):
        """Test build_Zn on the exact degree-2 pair."""
        solution = build_Zn(2, 1.5, 2.0, 4.0)
        assert solution.L == pytest.approx(3.0)
        assert solution.pell_residual_norm == pytest.approx(0.0, abs=1e-12)
        assert solution.vieta_residual == pytest.approx(0.0, abs=1e-12)

    def test_as_dict(self):
        """Test the serialized solution."""
        data = build_Zn(2, 1.5, 2.0, 4.0).as_dict()
        assert data["regime"] == "two_arcs"
        assert float(data["beta"]) == 4.0
        assert data["equioscillation"] == {"inner": 2, "outer": 2, "ok": True}
        assert set(data["residuals"]) == {"P1", "P2", "pell", "vieta", "coefficient"}


class TestEquioscillation:
    """Tests for the extremal-point count."""

    def test_degree_two(self):
        """Test x**2 - 3x - 1 alternates on both intervals."""
        Z = Poly([-1.0, -3.0, 1.0], ScalarMode.APPROX)
        assert verify_equioscillation(Z, 3.0, 2.0, 4.0) == (2, 2, True)

    def test_wrong_deviation(self):
        """Test a wrong L finds no extremal points."""
        Z = Poly([-1.0, -3.0, 1.0], ScalarMode.APPROX)
        assert not verify_equioscillation(Z, 2.0, 2.0, 4.0).ok


class TestResultant:
    """Tests for eliminating beta."""

    def test_degree_three(self):
        """Test the resultant for n=3, sigma=2/3 is (alpha - 2)**2."""
        R = resultant_alpha_polynomial(3, Fraction(2, 3))
        assert R == Poly([4, -4, 1])
        assert alpha_is_resultant_root(R, 2.0)
        assert not alpha_is_resultant_root(R, 2.5)

    def test_degree_two(self):
        """Test the resultant for n=2, sigma=3/2 is alpha - 2."""
        assert resultant_alpha_polynomial(2, Fraction(3, 2)) == Poly([-2, 1])

    def test_irrational_sigma(self):
        """Test a float sigma is refused."""
        with pytest.raises(ExactnessError):
            resultant_alpha_polynomial(3, 0.7)


class TestAcceptanceGrid:
    """Two-arc solutions across degrees 3 to 6 and three multiples of the threshold."""

    @pytest.mark.parametrize("factor", [1.5, 2.0, 4.0])
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_two_arc_solution(self, n, factor):
        """Test residuals, coefficient, Pell identity and extremal counts."""
        sigma = factor * sigma_threshold(n)
        solution = solve_zolotarev(n, sigma)
        assert solution.regime is Regime.TWO_ARCS
        assert 1.0 < solution.alpha < solution.beta
        p1, p2 = solution.residuals
        assert abs(p1) <= 1e-10
        assert abs(p2) <= 1e-10
        assert solution.coefficient_error <= 1e-9
        assert solution.vieta_residual <= 1e-9
        assert solution.pell_residual_norm <= 1e-8
        assert solution.equioscillation == (n, 2, True)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_residuals_recomputed(self, n):
        """Test the reported alpha and beta are roots of both residual equations."""
        sigma = 2 * sigma_threshold(n)
        solution = solve_zolotarev(n, sigma)
        p1, p2 = zolotarev_residuals(n, sigma, solution.alpha, solution.beta)
        assert abs(p1) <= 1e-10
        assert abs(p2) <= 1e-10
