"""Polyline arc-length utilities and disk crossings shared by planning code."""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "cumulative_arclength",
    "point_at_arc",
    "bearing_at_arc",
    "disk_crossing_arcs",
]


def _as_points(route) -> np.ndarray:
    pts = np.asarray(route, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValueError(f"route must be an (n>=2, 2) array of waypoints, got shape {pts.shape}")
    return pts


def cumulative_arclength(route) -> np.ndarray:
    """Arc length from the first waypoint to each waypoint; shape (n,)."""
    pts = _as_points(route)
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    return np.concatenate([[0.0], np.cumsum(seg)])


def point_at_arc(route, s: float) -> np.ndarray:
    """Position at arc length s, clamped to the polyline's extent."""
    pts = _as_points(route)
    cum = cumulative_arclength(pts)
    s = min(max(s, 0.0), cum[-1])
    k = int(np.searchsorted(cum, s, side="right")) - 1
    k = min(max(k, 0), len(pts) - 2)
    seg_len = cum[k + 1] - cum[k]
    frac = 0.0 if seg_len <= 0.0 else (s - cum[k]) / seg_len
    return pts[k] + frac * (pts[k + 1] - pts[k])


def bearing_at_arc(route, s: float) -> float:
    """Heading of the segment containing arc length s (following segment at knots)."""
    pts = _as_points(route)
    cum = cumulative_arclength(pts)
    s = min(max(s, 0.0), cum[-1])
    k = int(np.searchsorted(cum, s, side="right")) - 1
    k = min(max(k, 0), len(pts) - 2)
    d = pts[k + 1] - pts[k]
    return math.atan2(d[1], d[0])


def disk_crossing_arcs(route, center, radius: float) -> tuple[float, float] | None:
    """Arc lengths of the first entry into and last exit from a disk.

    Returns (s_in, s_out) along the polyline, or None when the route never
    passes through the disk interior. A route starting inside has s_in = 0;
    one ending inside has s_out equal to the total length. Tangent grazing
    does not count as a crossing.
    """
    pts = _as_points(route)
    c = np.asarray(center, dtype=float)
    cum = cumulative_arclength(pts)
    total = float(cum[-1])

    crossings: list[float] = []
    n_seg = len(pts) - 1
    for k in range(n_seg):
        p0, p1 = pts[k], pts[k + 1]
        d = p1 - p0
        a = float(d @ d)
        if a == 0.0:
            continue
        f = p0 - c
        b = 2.0 * float(f @ d)
        cc = float(f @ f) - radius * radius
        disc = b * b - 4.0 * a * cc
        if disc <= 0.0:
            continue
        sq = math.sqrt(disc)
        for root in ((-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)):
            # Half-open per segment so a crossing at a shared vertex is
            # counted once; the final segment keeps its endpoint.
            if 0.0 <= root < 1.0 or (k == n_seg - 1 and root == 1.0):
                crossings.append(float(cum[k] + root * (cum[k + 1] - cum[k])))

    crossings.sort()
    inside = bool(np.linalg.norm(pts[0] - c) < radius)
    s_in = 0.0 if inside else None
    s_out = None
    for s in crossings:
        inside = not inside
        if inside and s_in is None:
            s_in = s
        if not inside:
            s_out = s
    if s_in is None:
        return None
    if inside:
        s_out = total
    if s_out is None or s_out <= s_in:
        return None
    return float(s_in), float(s_out)
