"""Piecewise-linear loops on the flat torus and their intersection numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DomainError, ParseError

Point = tuple[Fraction, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float) and not math.isfinite(v):
        raise ParseError(f"non-finite coordinate {v}")
    return Fraction(v)


@dataclass(frozen=True)
class TorusLoop:
    """A closed loop on ``R^2 / Z^2`` given by a lifted polyline.

    ``segments`` lists the vertices of one period of the lift; the last
    vertex equals the first shifted by ``winding``. Coordinates are kept as
    exact fractions (floats convert exactly).
    """

    winding: tuple[int, int]
    segments: tuple[Point, ...]

    def __post_init__(self) -> None:
        p, q = (int(v) for v in self.winding)
        pts = tuple((_frac(x), _frac(y)) for x, y in self.segments)
        object.__setattr__(self, "winding", (p, q))
        object.__setattr__(self, "segments", pts)
        if len(pts) < 2:
            raise ParseError("a torus loop needs at least two vertices")
        first, last = pts[0], pts[-1]
        if (last[0] - first[0], last[1] - first[1]) != (p, q):
            raise ParseError(
                f"path endpoints differ by {(last[0] - first[0], last[1] - first[1])}, "
                f"not by the winding {(p, q)}"
            )
        for k in range(len(pts) - 1):
            if pts[k] == pts[k + 1]:
                raise ParseError(f"degenerate segment at vertex {k}")

    @classmethod
    def straight(
        cls, p: int, q: int, basepoint: Sequence[float] = (0, 0), pieces: int = 1
    ) -> "TorusLoop":
        """Straight loop of winding ``(p, q)`` through ``basepoint``."""
        x0, y0 = (_frac(v) for v in basepoint)
        pts = [(x0 + Fraction(p * k, pieces), y0 + Fraction(q * k, pieces)) for k in range(pieces + 1)]
        return cls((p, q), tuple(pts))

    @property
    def basepoint(self) -> Point:
        x, y = self.segments[0]
        return (x - math.floor(x), y - math.floor(y))

    def edges(self):
        pts = self.segments
        return [(pts[k], pts[k + 1]) for k in range(len(pts) - 1)]

    def to_json(self) -> dict:
        return {
            "winding": list(self.winding),
            "segments": [[float(x), float(y)] for x, y in self.segments],
        }


def _cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def signed_crossing_count(a: TorusLoop, b: TorusLoop) -> int:
    """Brute-force signed count of transverse crossings of two torus loops.

    Every segment of ``a`` is tested against every integer translate of
    every segment of ``b``. A crossing counts ``+1`` when the tangent of
    ``a`` turns counterclockwise onto the tangent of ``b``. Touching at a
    vertex or overlapping along a segment is not generic position and is
    rejected.
    """
    total = 0
    for (p0, p1) in a.edges():
        rx, ry = p1[0] - p0[0], p1[1] - p0[1]
        for (q0, q1) in b.edges():
            sx, sy = q1[0] - q0[0], q1[1] - q0[1]
            denom = _cross(rx, ry, sx, sy)
            m_lo = math.floor(min(p0[0], p1[0]) - max(q0[0], q1[0])) - 1
            m_hi = math.ceil(max(p0[0], p1[0]) - min(q0[0], q1[0])) + 1
            n_lo = math.floor(min(p0[1], p1[1]) - max(q0[1], q1[1])) - 1
            n_hi = math.ceil(max(p0[1], p1[1]) - min(q0[1], q1[1])) + 1
            for m in range(m_lo, m_hi + 1):
                for n in range(n_lo, n_hi + 1):
                    wx, wy = q0[0] + m - p0[0], q0[1] + n - p0[1]
                    if denom == 0:
                        if _cross(wx, wy, rx, ry) != 0:
                            continue
                        # collinear: overlap test along r
                        rr = rx * rx + ry * ry
                        t0 = (wx * rx + wy * ry) / rr
                        t1 = t0 + (sx * rx + sy * ry) / rr
                        if max(t0, t1) >= 0 and min(t0, t1) <= 1:
                            raise DomainError("loops overlap along a segment: perturb basepoint")
                        continue
                    u = _cross(wx, wy, sx, sy) / denom
                    v = _cross(wx, wy, rx, ry) / denom
                    if 0 < u < 1 and 0 < v < 1:
                        total += 1 if denom > 0 else -1
                    elif 0 <= u <= 1 and 0 <= v <= 1:
                        raise DomainError("loops meet at a vertex: perturb basepoint")
    return total


def intersection_number(a: TorusLoop, b: TorusLoop) -> int:
    """Algebraic intersection number ``p_a q_b - q_a p_b``.

    The homology pairing is cross-checked against the signed crossing count
    of the actual polylines, which also enforces generic position.
    """
    (pa, qa), (pb, qb) = a.winding, b.winding
    det = pa * qb - qa * pb
    counted = signed_crossing_count(a, b)
    if counted != det:
        raise DomainError(
            f"signed crossing count {counted} disagrees with homology pairing {det}"
        )
    return det
