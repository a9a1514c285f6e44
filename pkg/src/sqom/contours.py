"""Marching-squares contour extraction from a sampled scalar grid.

Plain linear-interpolation marching squares on the cell edges, with two
policies relevant to sweep data: cells touching a NaN sample (the sweep
sentinel for per-point failures) are skipped entirely, and saddle cells are
resolved by the cell-centre average. Segments are chained into polylines
deterministically (row-major cell order, endpoint matching on a rounded key).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ContourSet:
    """Per-level polylines in axis coordinates.

    polylines maps each requested level to a list of (N, 2) float arrays of
    (x, y) vertices. Levels that never cross the field are present with an
    empty list (informational; nothing to draw).
    """

    levels: tuple[float, ...]
    polylines: dict[float, list[np.ndarray]]

    def empty_levels(self) -> tuple[float, ...]:
        return tuple(lv for lv in self.levels if not self.polylines[lv])


def _edge_point(xa, ya, va, xb, yb, vb, level):
    # va, vb straddle the level; linear interpolation along the edge
    t = (level - va) / (vb - va)
    return (xa + t * (xb - xa), ya + t * (yb - ya))


_EDGES = {  # case index -> list of (edge_a, edge_b) segments
    1: [(3, 0)],
    2: [(0, 1)],
    3: [(3, 1)],
    4: [(1, 2)],
    6: [(0, 2)],
    7: [(3, 2)],
    8: [(2, 3)],
    9: [(2, 0)],
    11: [(2, 1)],
    12: [(1, 3)],
    13: [(1, 0)],
    14: [(0, 3)],
}


def _cell_segments(xs, ys, field, i, j, level):
    """Line segments crossing grid cell (i, j) (corner = lower-left index)."""
    corners = [
        (xs[i], ys[j], field[j, i]),
        (xs[i + 1], ys[j], field[j, i + 1]),
        (xs[i + 1], ys[j + 1], field[j + 1, i + 1]),
        (xs[i], ys[j + 1], field[j + 1, i]),
    ]
    values = [c[2] for c in corners]
    if any(not np.isfinite(v) for v in values):
        return []
    case = 0
    for bit, v in enumerate(values):
        # >= : a corner exactly on the level counts as above, so a contour
        # through a grid node yields clean crossings, not zero-length stubs
        if v >= level:
            case |= 1 << bit
    if case in (0, 15):
        return []

    def point(edge):
        a, b = edge, (edge + 1) % 4
        return _edge_point(*corners[a], *corners[b], level)

    if case in (5, 10):
        # saddle: disambiguate with the cell-centre average
        centre_above = (sum(values) / 4.0) >= level
        if case == 5:
            pairs = [(3, 0), (1, 2)] if centre_above else [(3, 2), (1, 0)]
        else:
            pairs = [(0, 1), (2, 3)] if centre_above else [(0, 3), (2, 1)]
    else:
        pairs = _EDGES[case]
    return [(point(a), point(b)) for a, b in pairs]


def _chain(segments):
    """Join segments sharing endpoints into polylines, deterministically."""

    def key(pt):
        return (round(pt[0], 12), round(pt[1], 12))

    segments = [(a, b) for a, b in segments if key(a) != key(b)]
    unused = list(range(len(segments)))
    by_end: dict[tuple, list[int]] = {}
    for idx, (a, b) in enumerate(segments):
        by_end.setdefault(key(a), []).append(idx)
        by_end.setdefault(key(b), []).append(idx)

    used = [False] * len(segments)
    polylines = []
    for start in unused:
        if used[start]:
            continue
        used[start] = True
        a, b = segments[start]
        line = [a, b]
        # grow forward from the tail, then backward from the head
        for grow_tail in (True, False):
            while True:
                end = line[-1] if grow_tail else line[0]
                nxt = None
                for idx in by_end.get(key(end), []):
                    if not used[idx]:
                        nxt = idx
                        break
                if nxt is None:
                    break
                used[nxt] = True
                sa, sb = segments[nxt]
                new_pt = sb if key(sa) == key(end) else sa
                if grow_tail:
                    line.append(new_pt)
                else:
                    line.insert(0, new_pt)
        polylines.append(np.array(line, dtype=float))
    return polylines


def extract_contours(
    x_values: np.ndarray,
    y_values: np.ndarray,
    field: np.ndarray,
    levels: list[float],
) -> ContourSet:
    """Extract equipotential polylines of `field` sampled on a rectilinear grid.

    Parameters
    ----------
    x_values, y_values : 1-D arrays of the axis sample positions.
    field : 2-D array indexed as field[y_index, x_index]; NaN marks failed
        sample points, whose surrounding cells are skipped.
    levels : contour levels to extract.
    """
    xs = np.asarray(x_values, dtype=float)
    ys = np.asarray(y_values, dtype=float)
    f = np.asarray(field, dtype=float)
    if f.shape != (ys.size, xs.size):
        raise ValueError(
            f"field shape {f.shape} does not match (len(y), len(x)) = ({ys.size}, {xs.size})"
        )
    if any(not np.isfinite(lv) for lv in levels):
        raise ValueError("contour levels must be finite")
    result: dict[float, list[np.ndarray]] = {}
    for level in levels:
        segments = []
        for j in range(ys.size - 1):
            for i in range(xs.size - 1):
                segments.extend(_cell_segments(xs, ys, f, i, j, level))
        result[level] = _chain(segments)
    return ContourSet(levels=tuple(levels), polylines=result)
