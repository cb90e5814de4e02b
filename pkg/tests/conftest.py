"""
Pytest configuration and fixtures for twoarcs tests.
"""

import random
import shutil
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest
from click.testing import CliRunner

from twoarcs.algebra import GaussianRational, Poly


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    tmpdir = tempfile.mkdtemp()
    yield Path(tmpdir)
    shutil.rmtree(tmpdir, ignore_errors=True)


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture
def t3():
    """4z**3 - 3z, the Chebyshev polynomial of degree 3."""
    return Poly([0, -3, 0, 4])


@pytest.fixture
def genuine_t4():
    """
    Degree-4 tuple a=1, b=-6 (T=-1), c=-27/5, d=-22/5 (T=+1) with x=0 and
    y=-12/5; its inverse image is [-6, -27/5] and [-22/5, 1].
    """
    return {
        "points": (1, -6, Fraction(-27, 5), Fraction(-22, 5)),
        "T": Poly([1, 0, Fraction(-11, 8), Fraction(-245, 432), Fraction(-25, 432)]),
        "x": 0,
        "y": Fraction(-12, 5),
    }


@pytest.fixture
def rng():
    """Seeded random generator, so randomized tests are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def gaussian_rational(rng):
    """Draw Gaussian rationals with small numerators and denominators."""

    def draw():
        re = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        im = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        return GaussianRational(re, im)

    return draw


@pytest.fixture
def distinct_gaussian_rationals(gaussian_rational):
    """Draw a list of pairwise different Gaussian rationals."""

    def draw(count):
        values = []
        while len(values) < count:
            value = gaussian_rational()
            if value not in values:
                values.append(value)
        return values

    return draw
