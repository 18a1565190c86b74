import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hullmap.section import from_points
from hullmap.shapes import circle_section, ellipse_section, rectangle_section

settings.register_profile(
    "numeric",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numeric")


@pytest.fixture(scope="session")
def circle41():
    return circle_section(41)


@pytest.fixture(scope="session")
def ellipse41():
    return ellipse_section(41, breadth=4.0, draft=1.0)


@pytest.fixture(scope="session")
def rectangle41():
    return rectangle_section(41, breadth=2.0, draft=1.0)


@pytest.fixture()
def tiny_symmetric():
    return from_points([(0.0, 1.0), (0.8, 0.9), (1.0, 0.5), (1.0, 0.0)], symmetric=True)


@pytest.fixture()
def tiny_asymmetric():
    return from_points(
        [(-1.0, 0.0), (-0.7, 0.8), (0.1, 1.1), (0.8, 0.7), (1.1, 0.0)], symmetric=False
    )


def pytest_assertrepr_compare(op, left, right):
    if isinstance(left, np.ndarray) or isinstance(right, np.ndarray):
        return [f"array comparison failed: {left!r} {op} {right!r}"]
    return None
