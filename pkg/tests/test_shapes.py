from math import cos, pi, radians, sin

import numpy as np
import pytest

from hullmap.shapes import (
    bulb_section,
    chine_section,
    circle_section,
    ellipse_section,
    fine_section,
    heel_section,
    heeled_rectangle,
    rectangle_section,
    superellipse_section,
)


@pytest.mark.parametrize(
    "maker",
    [
        circle_section,
        ellipse_section,
        rectangle_section,
        superellipse_section,
        chine_section,
        fine_section,
        bulb_section,
    ],
)
def test_generators_honour_count_and_conventions(maker):
    sec = maker(31)
    assert len(sec) == 31
    assert sec.symmetric
    assert sec.points[0, 0] == 0.0
    assert sec.points[-1, 1] == 0.0
    assert sec.breadth > 0.0 and sec.draft > 0.0


def test_circle_points_lie_on_the_circle():
    sec = circle_section(41, radius=1.0)
    r = np.hypot(sec.x, sec.y)
    assert np.allclose(r, 1.0, atol=1e-15)
    assert sec.points[0, 1] == pytest.approx(1.0)
    assert sec.points[-1, 0] == pytest.approx(1.0)


def test_ellipse_points_satisfy_the_implicit_equation():
    sec = ellipse_section(41, breadth=4.0, draft=1.0)
    assert np.allclose((sec.x / 2.0) ** 2 + sec.y**2, 1.0, atol=1e-14)


def test_superellipse_points_satisfy_the_implicit_equation():
    sec = superellipse_section(41, breadth=4.0, draft=1.0, power=2.3)
    inner = sec.points[1:-1]
    values = np.abs(inner[:, 0] / 2.0) ** 2.3 + np.abs(inner[:, 1]) ** 2.3
    assert np.allclose(values, 1.0, atol=1e-3)


def test_rectangle_keeps_the_corner_exact():
    sec = rectangle_section(41, breadth=2.0, draft=1.0)
    assert any(np.array_equal(p, [1.0, 1.0]) for p in sec.points)
    assert sec.x.max() == 1.0
    assert sec.y.max() == 1.0


def test_chine_keeps_the_knuckle_exact():
    sec = chine_section(41)
    assert any(np.array_equal(p, [0.85, 0.95]) for p in sec.points)


def test_bulb_is_bulbous():
    sec = bulb_section(41)
    assert sec.x.max() > sec.points[-1, 0]


def test_fine_section_is_hollow():
    sec = fine_section(41)
    # x grows slower than a straight line from keel to waterline would.
    frac = 1.0 - sec.y[1:-1] / sec.draft
    straight = frac * sec.points[-1, 0]
    assert np.all(sec.x[1:-1] <= straight + 1e-12)


def test_heel_section_conventions():
    sec = heel_section(ellipse_section(41), 20.0)
    assert not sec.symmetric
    assert sec.points[0, 1] == 0.0 and sec.points[-1, 1] == 0.0
    assert sec.points[0, 0] < 0.0 < sec.points[-1, 0]
    assert np.all(sec.y >= 0.0)


def test_heel_section_rejects_capsize():
    with pytest.raises(ValueError):
        heel_section(ellipse_section(41), 89.0, freeboard=0.01)


def test_heeled_rectangle_geometry():
    a = radians(15.0)
    sec = heeled_rectangle(21, breadth=2.0, draft=1.0, heel_deg=15.0)
    rot = np.array([[cos(a), -sin(a)], [sin(a), cos(a)]])
    low_port = rot @ np.array([-1.0, 1.0])
    low_star = rot @ np.array([1.0, 1.0])
    assert any(np.allclose(p, low_port, atol=1e-12) for p in sec.points)
    assert any(np.allclose(p, low_star, atol=1e-12) for p in sec.points)
    assert sec.points[0, 0] == pytest.approx(-1.0 / cos(a))
    assert sec.points[-1, 0] == pytest.approx(1.0 / cos(a))
    assert sec.draft == pytest.approx(low_star[1])


def test_generators_are_deterministic():
    first = bulb_section(41).points
    second = bulb_section(41).points
    assert np.array_equal(first, second)
