"""
Unit tests for sampling and drawing the inverse image.
"""

import pytest

from twoarcs.algebra import Poly
from twoarcs.preimage import (
    CSV_HEADER,
    PreimageSample,
    chebyshev_grid,
    emit_csv,
    emit_svg,
    match_tracks,
    order_into_arcs,
    sample_preimage,
)


def sorted_real_ends(arcs):
    return sorted(z.real for z in arcs.endpoints())


class TestSampling:
    """Tests for the continuation sampler."""

    def test_grid(self):
        """Test the Chebyshev grid runs from -1 to 1."""
        grid = chebyshev_grid(5)
        assert grid[0] == -1.0
        assert grid[-1] == 1.0
        assert grid == sorted(grid)
        with pytest.raises(ValueError):
            chebyshev_grid(1)

    def test_match_tracks(self):
        """Test roots are reordered to the nearest previous ones."""
        assert match_tracks([0, 1], [1.1, 0.1]) == [0.1 + 0j, 1.1 + 0j]

    def test_samples(self, t3):
        """Test every sample carries n roots with small residual."""
        samples = sample_preimage(t3, grid=21)
        assert len(samples) == 21
        assert all(len(s.roots) == 3 for s in samples)
        assert all(s.max_residual < 1e-8 for s in samples)
        assert samples[0].t == -1.0

    def test_constant_rejected(self):
        """Test constants have no inverse image to sample."""
        with pytest.raises(ValueError):
            sample_preimage(Poly([1]))


class TestArcs:
    """Tests for chaining tracks into arcs."""

    def test_linear(self):
        """Test T = z gives the segment [-1, 1]."""
        arcs = order_into_arcs(sample_preimage(Poly([0, 1]), grid=11))
        assert len(arcs) == 1
        assert not arcs.cloud
        assert sorted_real_ends(arcs) == [pytest.approx(-1.0), pytest.approx(1.0)]

    def test_double_root_is_joined(self):
        """Test 2z**2 - 1 joins its two tracks at 0."""
        arcs = order_into_arcs(sample_preimage(Poly([-1, 0, 2]), grid=41))
        assert len(arcs) == 1
        assert arcs.track_arc == [0, 0]
        assert sorted_real_ends(arcs) == [
            pytest.approx(-1.0, abs=1e-9),
            pytest.approx(1.0, abs=1e-9),
        ]

    def test_chebyshev_t3(self, t3):
        """Test T_3 is one arc over [-1, 1]."""
        arcs = order_into_arcs(sample_preimage(t3, grid=41))
        assert len(arcs) == 1
        assert sorted_real_ends(arcs) == [
            pytest.approx(-1.0, abs=1e-9),
            pytest.approx(1.0, abs=1e-9),
        ]

    def test_genuine_tuple(self, genuine_t4):
        """Test a genuine degree-4 tuple gives two arcs."""
        arcs = order_into_arcs(sample_preimage(genuine_t4["T"], grid=81))
        assert len(arcs) == 2
        assert not arcs.cloud
        assert sorted_real_ends(arcs) == [
            pytest.approx(-6.0, abs=1e-6),
            pytest.approx(-5.4, abs=1e-6),
            pytest.approx(-4.4, abs=1e-6),
            pytest.approx(1.0, abs=1e-6),
        ]

    def test_ambiguous_ends_give_cloud(self):
        """Test an end meeting two others is not chained."""
        samples = [PreimageSample(-1.0, [0j, 0j, 0j]), PreimageSample(1.0, [1 + 0j, 1j, -1 + 0j])]
        arcs = order_into_arcs(samples)
        assert arcs.cloud
        assert len(arcs) == 3

    def test_empty(self):
        """Test no samples give no arcs."""
        assert len(order_into_arcs([])) == 0


class TestEmit:
    """Tests for CSV and SVG output."""

    def test_csv(self, t3):
        """Test one row per root with the arc id."""
        samples = sample_preimage(t3, grid=5)
        arcs = order_into_arcs(samples)
        lines = emit_csv(samples, arcs.track_arc).decode("utf-8").splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 1 + 5 * 3
        assert lines[1].split(",")[0] == "-1"
        assert {line.split(",")[3] for line in lines[1:]} == {"0"}

    def test_csv_without_arcs(self):
        """Test the track index is written without an arc map."""
        samples = [PreimageSample(0.5, [0.25 + 0j, -0.75 + 1j])]
        lines = emit_csv(samples).decode("utf-8").splitlines()
        assert lines[1:] == ["0.5,0.25,0,0", "0.5,-0.75,1,1"]

    def test_svg(self, genuine_t4):
        """Test one path per polyline."""
        arcs = order_into_arcs(sample_preimage(genuine_t4["T"], grid=41))
        svg = emit_svg(arcs.polylines, 400, 300).decode("utf-8")
        assert svg.startswith("<?xml")
        assert svg.count("<path") == 2
        assert 'width="400"' in svg

    def test_svg_empty(self):
        """Test an empty drawing still has a valid viewBox."""
        svg = emit_svg([]).decode("utf-8")
        assert "<path" not in svg
        assert "viewBox" in svg
