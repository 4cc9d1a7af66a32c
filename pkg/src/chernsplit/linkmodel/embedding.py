"""Space-curve embeddings of braid closures and the Gauss linking integral.

These give a geometric route to linking numbers that never looks at PD
crossing signs, so it can be used to check them.
"""

from __future__ import annotations

import numpy as np

from .braid import BraidWord


def braid_embedding(
    braid: BraidWord, samples: int = 12, height: float = 0.4, inner_radius: float = 3.0
) -> list[np.ndarray]:
    """Closed polylines in R^3 for the closure of ``braid``.

    The braid is wrapped once around the z-axis: braid position ``x`` sits
    at radius ``inner_radius + x`` and braid time maps to the polar angle.
    The over-strand of each letter bulges to ``+z``, the under-strand to
    ``-z``; viewed from ``+z`` the projection is the braid diagram. One
    array of shape ``(m, 3)`` per component, same order as
    ``braid_closure`` (by lowest bottom position), without the repeated
    closing vertex.
    """
    n = braid.strand_count
    letters = braid.letters
    steps = max(len(letters), 1)
    # per strand label (its bottom position), the list of (x, z) samples
    tracks: dict[int, list[tuple[float, float, float]]] = {s: [] for s in range(n)}
    at = list(range(n))  # at[pos] = strand label occupying pos
    taus = np.arange(samples) / samples
    for step in range(steps):
        g = letters[step] if letters else 0
        p = abs(g) - 1
        for pos in range(n):
            s = at[pos]
            for tau in taus:
                t = (step + tau) / steps
                x, z = float(pos), 0.0
                if g and pos in (p, p + 1):
                    moving_right = pos == p
                    x = pos + (tau if moving_right else -tau)
                    over = moving_right if g > 0 else not moving_right
                    bump = height * np.sin(np.pi * tau)
                    z = bump if over else -bump
                tracks[s].append((t, x, z))
        if g:
            at[p], at[p + 1] = at[p + 1], at[p]

    perm_next = {}  # strand label -> label of strand whose bottom is where it ends
    for pos, s in enumerate(at):
        perm_next[s] = pos

    comps = []
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        pts = []
        s = start
        while True:
            seen.add(s)
            for t, x, z in tracks[s]:
                theta = 2.0 * np.pi * t
                r = inner_radius + x
                pts.append((r * np.cos(theta), r * np.sin(theta), z))
            s = perm_next[s]
            if s == start:
                break
        comps.append(np.array(pts))
    return comps


def _segment_pair_solid_angles(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    p1 = c1[:, None, :]
    p2 = np.roll(c1, -1, axis=0)[:, None, :]
    p3 = c2[None, :, :]
    p4 = np.roll(c2, -1, axis=0)[None, :, :]
    r13, r14 = p3 - p1, p4 - p1
    r23, r24 = p3 - p2, p4 - p2
    r12, r34 = p2 - p1, p4 - p3

    def unit(v):
        return v / np.linalg.norm(v, axis=-1, keepdims=True)

    n1 = unit(np.cross(r13, r14))
    n2 = unit(np.cross(r14, r24))
    n3 = unit(np.cross(r24, r23))
    n4 = unit(np.cross(r23, r13))

    def asin_dot(u, v):
        return np.arcsin(np.clip(np.sum(u * v, axis=-1), -1.0, 1.0))

    omega = asin_dot(n1, n2) + asin_dot(n2, n3) + asin_dot(n3, n4) + asin_dot(n4, n1)
    sign = np.sign(np.sum(np.cross(r34, r12) * r13, axis=-1))
    return omega * sign


def gauss_linking_integral(c1: np.ndarray, c2: np.ndarray) -> float:
    """Gauss double integral for two disjoint closed polylines.

    Each segment pair is integrated in closed form as a signed solid angle
    over ``4 pi``; the result is the linking number up to round-off.
    """
    return float(np.sum(_segment_pair_solid_angles(c1, c2)) / (4.0 * np.pi))
