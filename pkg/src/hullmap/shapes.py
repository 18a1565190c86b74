"""Parametric section geometries used by the tests, scripts and demos.

Everything returns a validated :class:`SectionOffsets`.  Smooth profiles are
sampled densely and resampled to uniform arc length; cornered profiles pin
their knuckle points exactly by distributing samples per straight segment.
"""

from __future__ import annotations

from math import cos, pi, radians, sin

import numpy as np

from .section import SectionOffsets, from_points, mirror_to_full


def _resample_arclength(points: np.ndarray, count: int) -> np.ndarray:
    seg = np.hypot(np.diff(points[:, 0]), np.diff(points[:, 1]))
    s = np.concatenate([[0.0], np.cumsum(seg)])
    targets = np.linspace(0.0, s[-1], count)
    return np.column_stack(
        [np.interp(targets, s, points[:, 0]), np.interp(targets, s, points[:, 1])]
    )


def _polyline_points(vertices: np.ndarray, count: int) -> np.ndarray:
    """Sample ``count`` points along a polyline, keeping every vertex exact."""
    vertices = np.asarray(vertices, dtype=float)
    lengths = np.hypot(np.diff(vertices[:, 0]), np.diff(vertices[:, 1]))
    intervals = count - 1
    raw = lengths / lengths.sum() * intervals
    alloc = np.maximum(1, np.round(raw).astype(int))
    while alloc.sum() > intervals:
        alloc[np.argmax(alloc - raw)] -= 1
    while alloc.sum() < intervals:
        alloc[np.argmin(alloc - raw)] += 1
    chunks = [vertices[:1]]
    for k, n in enumerate(alloc):
        steps = np.linspace(0.0, 1.0, n + 1)[1:, None]
        chunks.append(vertices[k] + steps * (vertices[k + 1] - vertices[k]))
    return np.vstack(chunks)


def _snap_ends(points: np.ndarray) -> np.ndarray:
    # Trig sampling leaves ~1e-16 residue where the contour meets the
    # centreline and waterline; the validator wants those zeros exact.
    points[0, 0] = 0.0
    points[-1, 1] = 0.0
    return points


def circle_section(count: int = 41, radius: float = 1.0) -> SectionOffsets:
    t = np.linspace(0.0, pi / 2.0, count)
    pts = np.column_stack([radius * np.sin(t), radius * np.cos(t)])
    return from_points(_snap_ends(pts), True)


def ellipse_section(count: int = 41, breadth: float = 4.0, draft: float = 1.0) -> SectionOffsets:
    t = np.linspace(0.0, pi / 2.0, count)
    pts = np.column_stack([0.5 * breadth * np.sin(t), draft * np.cos(t)])
    return from_points(_snap_ends(pts), True)


def superellipse_section(
    count: int = 41, breadth: float = 4.0, draft: float = 1.0, power: float = 2.3
) -> SectionOffsets:
    """Rounded-rectangle family; power 2 is the ellipse."""
    t = np.linspace(0.0, pi / 2.0, 20 * count)
    e = 2.0 / power
    dense = np.column_stack([0.5 * breadth * np.sin(t) ** e, draft * np.cos(t) ** e])
    return from_points(_snap_ends(_resample_arclength(dense, count)), True)


def rectangle_section(count: int = 41, breadth: float = 2.0, draft: float = 1.0) -> SectionOffsets:
    half = 0.5 * breadth
    vertices = np.array([[0.0, draft], [half, draft], [half, 0.0]])
    return from_points(_polyline_points(vertices, count), True)


def chine_section(count: int = 41) -> SectionOffsets:
    """Hard-chine planing form: straight deadrise to a knuckle, flared topside."""
    vertices = np.array([[0.0, 1.2], [0.85, 0.95], [1.05, 0.0]])
    return from_points(_polyline_points(vertices, count), True)


def fine_section(count: int = 41, breadth: float = 1.0, draft: float = 2.0) -> SectionOffsets:
    """Deep narrow V with hollow sides, as in a fine-ended hull."""
    t = np.linspace(0.0, 1.0, 20 * count)
    dense = np.column_stack([0.5 * breadth * t**1.6, draft * (1.0 - t)])
    return from_points(_resample_arclength(dense, count), True)


def bulb_section(count: int = 41) -> SectionOffsets:
    """Bulbous-bow style section: round bulb at the keel, waisted neck above.

    The bulb is a circular arc; the neck is a tangent-matched cubic ending
    wall-sided at the waterline.  Bulb half-breadth exceeds the waterline
    half-breadth.
    """
    draft = 2.0
    bulb_r = 0.55
    centre_y = draft - bulb_r
    join_angle = radians(100.0)
    waterline_half = 0.35

    phi = np.linspace(0.0, join_angle, 10 * count)
    arc = np.column_stack([bulb_r * np.sin(phi), centre_y + bulb_r * np.cos(phi)])

    p0 = np.array([bulb_r * sin(join_angle), centre_y + bulb_r * cos(join_angle)])
    p1 = np.array([waterline_half, 0.0])
    chord = float(np.hypot(*(p1 - p0)))
    t0 = np.array([cos(join_angle), -sin(join_angle)]) * chord
    t1 = np.array([0.0, -1.0]) * chord
    s = np.linspace(0.0, 1.0, 10 * count)[:, None]
    h00 = 2 * s**3 - 3 * s**2 + 1
    h10 = s**3 - 2 * s**2 + s
    h01 = -2 * s**3 + 3 * s**2
    h11 = s**3 - s**2
    neck = h00 * p0 + h10 * t0 + h01 * p1 + h11 * t1

    dense = np.vstack([arc, neck[1:]])
    pts = _resample_arclength(dense, count)
    pts[0] = [0.0, draft]
    pts[-1] = [waterline_half, 0.0]
    return from_points(pts, True)


def heel_section(section: SectionOffsets, heel_deg: float, freeboard: float = 1.0) -> SectionOffsets:
    """Rotate a symmetric section about the origin and cut it at the waterline.

    Topsides are extended straight up by ``freeboard`` before rotating so both
    waterline crossings land on the extended sides rather than on deck.
    """
    full = mirror_to_full(section).points
    extended = np.vstack(
        [[full[0, 0], -freeboard], full, [full[-1, 0], -freeboard]]
    )
    a = radians(heel_deg)
    rot = np.array([[cos(a), -sin(a)], [sin(a), cos(a)]])
    rotated = extended @ rot.T

    y = rotated[:, 1]
    below = y > 0.0
    if not below.any():
        raise ValueError("section fully emerged after heeling")
    first = int(np.argmax(below))
    last = len(y) - 1 - int(np.argmax(below[::-1]))
    if first == 0 or last == len(y) - 1:
        raise ValueError("freeboard too small to reach the heeled waterline")

    def crossing(i, j):
        t = y[i] / (y[i] - y[j])
        return rotated[i] + t * (rotated[j] - rotated[i])

    entry = crossing(first - 1, first)
    exit_ = crossing(last + 1, last)
    pts = np.vstack([entry, rotated[first : last + 1], exit_])
    pts[0, 1] = 0.0
    pts[-1, 1] = 0.0
    return from_points(pts, False)


def heeled_rectangle(
    count: int = 41, breadth: float = 2.0, draft: float = 1.0, heel_deg: float = 15.0
) -> SectionOffsets:
    """Submerged contour of a heeled box barge with exact corner points."""
    a = radians(heel_deg)
    half = 0.5 * breadth
    rot = np.array([[cos(a), -sin(a)], [sin(a), cos(a)]])
    low_port = rot @ np.array([-half, draft])
    low_star = rot @ np.array([half, draft])
    # Waterline crossings of the rotated vertical sides.
    wl_port = np.array([-half / cos(a), 0.0])
    wl_star = np.array([half / cos(a), 0.0])
    vertices = np.array([wl_port, low_port, low_star, wl_star])
    return from_points(_polyline_points(vertices, count), False)
