"""
Shared fixtures: presets at small truncations and factorised kernels, built once per session.
"""
import math

import pytest

from config import preset_problem
from scattering import KernelBank, kernel
from scattering.objects import ArraySpec, ProblemSpec, SolverOptions

WAVENUMBER = 5 * math.pi
SPACING = 0.1
RADIUS = 0.001


@pytest.fixture(scope="session")
def kd():
    """Kernel of the standard arrays (k = 5pi, s = 0.1, a = 0.001) with lambda_0..lambda_512."""
    return kernel.factorize(WAVENUMBER, SPACING, RADIUS, n_lambda=512)


@pytest.fixture(scope="session")
def bank():
    return KernelBank(SolverOptions())


@pytest.fixture
def wedge():
    return preset_problem("wedge", truncation=40)


@pytest.fixture
def line():
    return preset_problem("line", truncation=60)


@pytest.fixture
def semi_infinite():
    return preset_problem("semi-infinite", truncation=60)


@pytest.fixture
def mirror_pair():
    """Two arrays mirrored in the x axis, incidence along the axis of symmetry."""
    arrays = [ArraySpec(SPACING, RADIUS, math.pi / 3, 0.05, math.pi / 2),
              ArraySpec(SPACING, RADIUS, -math.pi / 3, 0.05, -math.pi / 2)]
    return ProblemSpec(WAVENUMBER, math.pi, arrays, truncation=30)
