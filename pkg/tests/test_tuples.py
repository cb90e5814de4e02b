"""
Unit tests for the tuple pipeline: endpoint polynomial, extremal points,
T_n / U_{n-2} construction, validation and composition.
"""

from fractions import Fraction

import pytest

from twoarcs.algebra import GaussianRational, Poly, ScalarMode, in_exact_context
from twoarcs.newton import LABELS
from twoarcs.tuples import (
    Classification,
    EndpointTuple,
    SolveOptions,
    build_Tn,
    build_Tn_from_polys,
    chebyshev_t,
    chebyshev_u,
    compose_chebyshev,
    compose_double,
    endpoint_degree_bound,
    endpoint_polynomial,
    enumerate_tuples,
    extremal_x_polynomial,
    is_half_degree_tuple,
    max_tuple_count,
    normalize_polynomial,
    pell_residual,
    pell_residual_norm,
    points_of,
    power_sum_system_residual,
    role_assignments,
    small_degree_oracle,
    solve_fourth_endpoint,
    solve_tuple,
)
from twoarcs.tuples import pipeline
from twoarcs.utils.error_handler import DegenerateSystemError, ExactnessError, ValidationError

HALF = Fraction(1, 2)


@pytest.fixture
def t3_tuple():
    """Endpoints of the Chebyshev polynomial T_3 read as a degenerate tuple."""
    return EndpointTuple.create(3, -1, HALF, HALF, 1)


class TestEndpointTuple:
    """Tests for EndpointTuple."""

    def test_degenerate_flag(self, t3_tuple):
        """Test coinciding endpoints are flagged."""
        assert t3_tuple.degenerate
        assert not EndpointTuple.create(3, 3, 6, -2, 7).degenerate

    def test_quartic(self, t3_tuple):
        """Test H = (z-a)(z-b)(z-c)(z-d)."""
        assert t3_tuple.H() == Poly.from_roots([-1, HALF, HALF, 1])

    def test_mixed_values_become_approximate(self):
        """Test one float makes the whole tuple approximate."""
        tup = EndpointTuple.create(4, 1, 2, 3, 4.5)
        assert tup.mode is ScalarMode.APPROX
        assert tup.a == complex(1)

    def test_multiset_key_ignores_order(self):
        """Test the endpoint set identity."""
        one = EndpointTuple.create(3, 3, 6, -2, 7)
        other = EndpointTuple.create(3, 7, -2, 6, 3)
        assert one.multiset_key() == other.multiset_key()

    def test_as_dict(self):
        """Test serialized endpoints and roles."""
        data = EndpointTuple.create(4, 1, -6, Fraction(-27, 5), Fraction(-22, 5)).as_dict()
        assert data["c"] == "-27/5"
        assert data["roles"] == {"minus": ["a", "b"], "plus": ["c", "d"]}
        assert data["degenerate"] is False


class TestEndpointPolynomial:
    """Tests for the endpoint polynomial."""

    def test_bounds(self):
        """Test degree and count bounds."""
        assert [endpoint_degree_bound(n) for n in (2, 3, 4, 5)] == [1, 2, 4, 6]
        assert [max_tuple_count(n) for n in (3, 4, 5)] == [8, 12, 24]

    def test_normalize(self):
        """Test the canonical multiple."""
        assert normalize_polynomial(Poly([2, -4])) == Poly([-1, 2])
        assert normalize_polynomial(Poly([HALF, Fraction(1, 3)])) == Poly([3, 2])
        assert normalize_polynomial(Poly([0, GaussianRational(0, -2)])) == Poly([0, 1])
        approx = normalize_polynomial(Poly([2.0, 4.0]))
        assert approx.is_close(Poly([0.5, 1.0]), 1e-15)

    def test_degree_two(self):
        """Test the unknown a for degree 2 given b, c, d."""
        p = endpoint_polynomial(2, {"b": 0, "c": -1, "d": 1}, "a")
        assert p == Poly([0, 1])

    def test_degree_three(self):
        """Test d**2 - 1 for a = -1, b = c = 1/2."""
        p = endpoint_polynomial(3, {"a": -1, "b": HALF, "c": HALF})
        assert p == Poly([-1, 0, 1])

    def test_matches_explicit_equation(self):
        """Test the degree-3 polynomial is a multiple of the explicit equation."""
        p = endpoint_polynomial(3, {"a": 3, "b": 6, "c": -2})
        d = Poly.monomial()
        explicit = small_degree_oracle(3, 3, 6, -2, d)
        assert p.is_proportional(explicit)
        assert p.is_proportional(Poly([7, 3]) * Poly([-7, 1]))

    def test_bad_labels(self):
        """Test the known labels must complement the unknown."""
        with pytest.raises(ValueError):
            endpoint_polynomial(3, {"a": 1, "b": 2}, "d")
        with pytest.raises(ValueError):
            endpoint_polynomial(3, {"a": 1, "b": 2, "c": 3}, "e")


class TestOracle:
    """Tests for the explicit equations of degrees 2 to 4."""

    def test_degree_two(self):
        """Test a + b - c - d."""
        assert small_degree_oracle(2, 0, 0, -1, 1) == 0
        assert small_degree_oracle(2, 1, 0, 0, 0) == 1

    def test_degree_three(self):
        """Test the endpoint and x-equations on known tuples."""
        assert small_degree_oracle(3, -1, HALF, HALF, 1) == 0
        assert small_degree_oracle(3, -1, HALF, HALF, 1, "x", -HALF) == 0
        assert small_degree_oracle(3, 3, 6, -2, 7) == 0
        assert small_degree_oracle(3, 3, 6, -2, 7, "x", 0) == 0

    def test_degree_four(self, genuine_t4):
        """Test all three equations on a genuine degree-4 tuple."""
        points = genuine_t4["points"]
        assert small_degree_oracle(4, *points) == 0
        assert small_degree_oracle(4, *points, kind="x", at=genuine_t4["x"]) == 0
        assert small_degree_oracle(4, *points, kind="y", at=genuine_t4["y"]) == 0

    def test_unsupported(self):
        """Test unsupported degrees and kinds."""
        with pytest.raises(ValidationError):
            small_degree_oracle(5, 0, 1, 2, 3)
        with pytest.raises(ValidationError):
            small_degree_oracle(3, 0, 1, 2, 3, kind="y", at=0)
        with pytest.raises(ValidationError):
            small_degree_oracle(4, 0, 1, 2, 3, kind="x")


class TestSolveTuple:
    """Tests for extremal points and T_n / U_{n-2}."""

    def test_chebyshev_t3(self, t3_tuple, t3):
        """Test the T_3 tuple recovers T_3 itself."""
        solution = solve_tuple(3, t3_tuple)
        assert solution.T == t3
        assert solution.U == Poly([2, 4])
        assert solution.xs == [GaussianRational(-HALF)]
        assert solution.ys == []
        assert solution.points_exact
        assert solution.pell_residual_norm == 0
        assert solution.system_residual == 0

    def test_degree_three(self):
        """Test a non-symmetric degree-3 tuple."""
        solution = solve_tuple(3, EndpointTuple.create(3, 3, 6, -2, 7))
        assert solution.T == Poly([1, 0, Fraction(-7, 18), Fraction(1, 18)])
        assert solution.xs == [GaussianRational(0)]

    def test_degree_two(self):
        """Test degree 2 has no extremal points."""
        solution = solve_tuple(2, EndpointTuple.create(2, 0, 0, -1, 1))
        assert solution.T == Poly([-1, 0, 2])
        assert solution.U == Poly([2])
        assert solution.xs == [] and solution.ys == []

    def test_genuine_degree_four(self, genuine_t4):
        """Test a degree-4 tuple that is not a composition."""
        solution = solve_tuple(4, EndpointTuple.create(4, *genuine_t4["points"]))
        assert solution.T == genuine_t4["T"]
        assert solution.xs == [GaussianRational(genuine_t4["x"])]
        assert solution.ys == [GaussianRational(genuine_t4["y"])]
        assert solution.composed_from is None
        assert solution.system_residual == 0

    def test_half_degree_composition(self):
        """Test a symmetric degree-4 tuple falls back to 2 T_2**2 - 1."""
        tup = EndpointTuple.create(4, -1, -HALF, HALF, 1)
        promoted = SolveOptions(promote=True)
        solution = solve_tuple(4, tup, promoted)
        T2 = Poly([Fraction(-5, 3), 0, Fraction(8, 3)])
        assert solution.composed_from == 2
        assert solution.T == 2 * T2 * T2 - 1
        assert pell_residual(solution.T, solution.U, tup).is_zero
        assert not solution.points_exact
        found, _ = is_half_degree_tuple(4, tup, promoted)
        assert found

    def test_irrational_points_refused_without_promotion(self):
        """Test an exact tuple with irrational extremal points raises instead of rounding."""
        tup = EndpointTuple.create(6, -1, HALF, HALF, 1)
        with pytest.raises(ExactnessError):
            solve_tuple(6, tup)
        with pytest.raises(ExactnessError):
            solve_tuple(4, EndpointTuple.create(4, -1, -HALF, HALF, 1))

    def test_irrational_points_promoted(self):
        """Test promotion keeps T_n exact and reports the points approximately."""
        tup = EndpointTuple.create(6, -1, HALF, HALF, 1)
        solution = solve_tuple(6, tup, SolveOptions(promote=True))
        assert not solution.points_exact
        assert solution.T.mode is ScalarMode.EXACT
        assert pell_residual(solution.T, solution.U, tup).is_zero
        assert all(isinstance(y, complex) for y in solution.ys)
        assert any(abs(abs(y) - 3**0.5 / 2) < 1e-9 for y in solution.ys)

    def test_exact_tuples_solved_strictly(self, monkeypatch):
        """Test T_n is built with float promotion switched off for exact tuples only."""
        seen = []

        def recording(*args, **kwargs):
            seen.append(in_exact_context())
            return build_Tn_from_polys(*args, **kwargs)

        monkeypatch.setattr(pipeline, "build_Tn_from_polys", recording)
        tup = EndpointTuple.create(3, 3, 6, -2, 7)
        solve_tuple(3, tup)
        solve_tuple(3, tup.to_approx())
        assert seen == [True, False]
        assert not in_exact_context()

    def test_points_of_promotion(self):
        """Test points_of raises on irrational roots only when promotion is off."""
        p = Poly([-2, 0, 1])
        with pytest.raises(ExactnessError):
            points_of(p, promote=False)
        roots, exact = points_of(p)
        assert not exact
        assert sorted(r.real for r in roots) == pytest.approx([-(2**0.5), 2**0.5])

    def test_half_degree_needs_even_degree(self, t3_tuple):
        """Test the half-degree test rejects odd degrees."""
        with pytest.raises(ValueError):
            is_half_degree_tuple(3, t3_tuple)

    def test_not_a_tuple(self):
        """Test arbitrary points are rejected."""
        with pytest.raises((ValidationError, DegenerateSystemError)):
            solve_tuple(3, EndpointTuple.create(3, 0, 1, 2, 3))

    def test_as_dict(self, t3_tuple):
        """Test the serialized solution."""
        data = solve_tuple(3, t3_tuple).as_dict()
        assert data["T"] == ["0", "-3", "0", "4"]
        assert data["xs"] == ["-1/2"]
        assert data["mode"] == "exact"
        assert "composed_from" not in data

    def test_extremal_points(self, t3_tuple):
        """Test the x-polynomial of T_3 has its root at -1/2."""
        points, exact = points_of(extremal_x_polynomial(3, t3_tuple))
        assert exact
        assert points == [GaussianRational(-HALF)]

    def test_build_from_points(self, t3_tuple, t3):
        """Test build_Tn from explicit points, and the count check."""
        T, U = build_Tn(3, t3_tuple, [-HALF], [])
        assert T == t3
        assert U == Poly([2, 4])
        with pytest.raises(ValidationError):
            build_Tn(3, t3_tuple, [], [])

    def test_system_residual(self, t3_tuple):
        """Test the power-sum system holds at the T_3 extremal point."""
        assert power_sum_system_residual(3, t3_tuple, [GaussianRational(-HALF)], []) == 0
        assert power_sum_system_residual(3, t3_tuple, [GaussianRational(1)], []) > 0


class TestFourthEndpoint:
    """Tests for solving and enumerating tuples."""

    def test_candidates(self, t3):
        """Test both roots are classified and only the proper one validates."""
        result = solve_fourth_endpoint(3, {"a": -1, "b": HALF, "c": HALF})
        assert result.values() == [GaussianRational(-1), GaussianRational(1)]
        degenerate, proper = result.candidates
        assert degenerate.classification is Classification.DEGENERATE
        assert degenerate.solution is None
        assert proper.classification is Classification.PROPER
        assert proper.solution.T == t3
        assert result.skipped_irrational == 0

    def test_rational_roots(self):
        """Test the roots -7/3 and 7 of a non-symmetric configuration."""
        result = solve_fourth_endpoint(3, {"a": 3, "b": 6, "c": -2})
        assert result.values() == [GaussianRational(Fraction(-7, 3)), GaussianRational(7)]
        seven = result.candidates[1]
        assert seven.classification is Classification.PROPER
        assert seven.solution.T == Poly([1, 0, Fraction(-7, 18), Fraction(1, 18)])

    def test_role_assignments(self):
        """Test the number of ways to place three points."""
        assert len(role_assignments(3, [1, 2, 3])) == 4
        assert len(role_assignments(4, [1, 2, 3])) == 3
        assert role_assignments(4, [1, 2, 3])[0] == ({"b": 1, "c": 2, "d": 3}, "a")
        with pytest.raises(ValueError):
            role_assignments(3, [1, 2])

    def test_enumerate(self, t3):
        """Test enumeration finds T_3 through -1, 1/2, 1/2."""
        solutions = enumerate_tuples(3, [-1, HALF, HALF])
        assert any(s.T == t3 for s in solutions)
        keys = [s.tuple.multiset_key() for s in solutions]
        assert len(keys) == len(set(keys))


class TestComposition:
    """Tests for Chebyshev polynomials and composition."""

    def test_chebyshev(self, t3):
        """Test the recurrences."""
        assert chebyshev_t(0) == Poly([1])
        assert chebyshev_t(3) == t3
        assert chebyshev_u(2) == Poly([-1, 0, 4])

    def test_double(self, t3_tuple, t3):
        """Test T_2(T_3) = T_6 with a Pell check against the tuple."""
        T, U = compose_double(t3, Poly([2, 4]), t3_tuple)
        assert T == chebyshev_t(6)
        assert pell_residual(T, U, t3_tuple).is_zero

    def test_without_tuple(self, t3):
        """Test composition checks (T**2 - 1) / U**2 is a quartic."""
        T, _ = compose_chebyshev(t3, Poly([2, 4]), 3)
        assert T == chebyshev_t(9)

    def test_rejections(self, t3):
        """Test bad orders and pairs."""
        with pytest.raises(ValueError):
            compose_chebyshev(t3, Poly([2, 4]), 0)
        with pytest.raises(ValidationError):
            compose_chebyshev(t3, Poly([]), 2)
        with pytest.raises(ValidationError):
            compose_chebyshev(t3, Poly([1, 1]), 2)


class TestPellIdentity:
    """T_n**2 - H U_{n-2}**2 = 1 across built and composed solutions."""

    @pytest.fixture
    def seed_pairs(self, t3_tuple, t3, genuine_t4):
        odd = solve_tuple(3, EndpointTuple.create(3, 3, 6, -2, 7))
        four = solve_tuple(4, EndpointTuple.create(4, *genuine_t4["points"]))
        return [
            (t3, Poly([2, 4]), t3_tuple),
            (odd.T, odd.U, odd.tuple),
            (four.T, four.U, four.tuple),
        ]

    def test_exact_compositions(self, seed_pairs):
        """Test the residual is exactly zero for compositions up to degree 9."""
        degrees = set()
        for T, U, tup in seed_pairs:
            for k in range(1, 9 // T.degree + 1):
                Tk, Uk = compose_chebyshev(T, U, k, tup)
                degrees.add(Tk.degree)
                assert pell_residual(Tk, Uk, tup).is_zero
                assert pell_residual_norm(Tk, Uk, tup) == 0
        assert degrees == {3, 4, 6, 8, 9}

    def test_exact_solutions(self):
        """Test solved and enumerated tuples carry a zero residual."""
        promoted = SolveOptions(promote=True)
        solutions = [
            solve_tuple(6, EndpointTuple.create(6, -1, HALF, HALF, 1), promoted),
            solve_tuple(4, EndpointTuple.create(4, -1, -HALF, HALF, 1), promoted),
        ]
        solutions += enumerate_tuples(3, [-1, HALF, HALF])
        solutions += enumerate_tuples(2, [0, 0, -1])
        for solution in solutions:
            assert solution.mode is ScalarMode.EXACT
            assert solution.pell_residual_norm == 0
            assert pell_residual(solution.T, solution.U, solution.tuple).is_zero

    def test_approximate_compositions(self, seed_pairs):
        """Test the relative residual stays below 1e-9 up to degree 16."""
        degrees = set()
        for T, U, tup in seed_pairs:
            T, U, tup = T.to_approx(), U.to_approx(), tup.to_approx()
            for k in range(1, 16 // T.degree + 1):
                Tk, Uk = compose_chebyshev(T, U, k, tup)
                degrees.add(Tk.degree)
                bound = 1e-9 * max(1.0, Tk.norm_inf()) ** 2
                assert pell_residual_norm(Tk, Uk, tup) <= bound
        assert max(degrees) == 16

    def test_approximate_solutions(self, genuine_t4):
        """Test approximate solves report a residual within the relative bound."""
        for n, points in [(3, (3, 6, -2, 7)), (4, genuine_t4["points"])]:
            tup = EndpointTuple.create(n, *points).to_approx()
            solution = solve_tuple(n, tup)
            assert solution.mode is ScalarMode.APPROX
            bound = 1e-9 * max(1.0, solution.T.norm_inf()) ** 2
            assert solution.pell_residual_norm <= bound


class TestRandomEndpoints:
    """Randomized checks of the endpoint polynomial."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("unknown", LABELS)
    def test_matches_explicit_equation(self, n, unknown, gaussian_rational):
        """Test the machine-built polynomial is a multiple of the explicit one."""
        z = Poly.monomial()
        for _ in range(100):
            known = {label: gaussian_rational() for label in LABELS if label != unknown}
            slots = [known.get(label, z) for label in LABELS]
            p = endpoint_polynomial(n, known, unknown)
            assert p.is_proportional(small_degree_oracle(n, *slots))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_degree_bound(self, n, gaussian_rational):
        """Test the degree never exceeds the bound for the degree."""
        for _ in range(5):
            known = {label: gaussian_rational() for label in "abc"}
            p = endpoint_polynomial(n, known, "d")
            assert p.degree <= endpoint_degree_bound(n)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8, 9, 10, 11])
    def test_degree_bound_high_degrees(self, n, gaussian_rational):
        """Test the degree bound for n up to 11."""
        known = {label: gaussian_rational() for label in "abc"}
        assert endpoint_polynomial(n, known, "d").degree <= endpoint_degree_bound(n)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_homogeneity(self, n, gaussian_rational):
        """Test doubling the known endpoints doubles the roots."""
        known = {label: gaussian_rational() for label in "bcd"}
        doubled = {label: value * 2 for label, value in known.items()}
        p = endpoint_polynomial(n, known, "a")
        assert endpoint_polynomial(n, doubled, "a").is_proportional(p.scale_argument(HALF))

    @pytest.mark.parametrize("n, points", [(2, [0, 0, -1]), (3, [-1, HALF, HALF])])
    def test_enumeration_count(self, n, points):
        """Test the tuple count bound and that workers do not change the result."""
        serial = enumerate_tuples(n, points)
        parallel = enumerate_tuples(n, points, SolveOptions(workers=3))
        assert 1 <= len(serial) <= max_tuple_count(n)
        assert [s.tuple.multiset_key() for s in serial] == [
            s.tuple.multiset_key() for s in parallel
        ]
