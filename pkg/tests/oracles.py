"""Independent reference computations used by the tests.

Nothing here calls into the package's evaluators: each oracle recomputes
its quantity from the raw data by a different route.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

# Jones polynomials from standard knot tables, as {exponent of t: coefficient}.
# Orientation: right-handed trefoil and positive torus knots/links; the
# 2-component torus links carry parallel orientation.
JONES = {
    "unknot": {0: 1},
    "unlink2": {-0.5: -1, 0.5: -1},
    "hopf": {0.5: -1, 2.5: -1},
    "trefoil": {1: 1, 3: 1, 4: -1},
    "figure8": {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1},
    "cinquefoil": {2: 1, 4: 1, 5: -1, 6: 1, 7: -1},
    "torus_link_2_4": {1.5: -1, 3.5: -1, 4.5: 1, 5.5: -1},
}


def jones_at(name: str, a: complex) -> complex:
    """``V(t)`` at ``t = A^-4`` (so ``t^(1/2) = A^-2``)."""
    return sum(c * a ** (-4 * e) for e, c in JONES[name].items())


def naive_bracket(crossings, n_free_loops: int, a: complex) -> complex:
    """Kauffman bracket by listing every state and tracing loops with sets.

    A-smoothing joins slots (0,1),(2,3); B-smoothing joins (0,3),(1,2).
    Each crossingless circle adds one loop. The empty diagram is 1 and
    every loop contributes ``d``, so the unknot evaluates to ``d``.
    """
    d = -a * a - a ** -2
    n = len(crossings)
    total = 0j
    for state in itertools.product((0, 1), repeat=n):
        edges = []
        for c, s in zip(crossings, state):
            if s == 0:
                edges += [(c[0], c[1]), (c[2], c[3])]
            else:
                edges += [(c[0], c[3]), (c[1], c[2])]
        adjacency: dict[int, set[int]] = {}
        for u, v in edges:
            adjacency.setdefault(u, set()).add(v)
            adjacency.setdefault(v, set()).add(u)
        unvisited = set(adjacency)
        loops = 0
        while unvisited:
            stack = [unvisited.pop()]
            while stack:
                for w in adjacency[stack.pop()]:
                    if w in unvisited:
                        unvisited.remove(w)
                        stack.append(w)
            loops += 1
        loops += n_free_loops
        n_a = state.count(0)
        total += a ** (n_a - (n - n_a)) * d**loops
    return total


def gauss_linking_quadrature(c1: np.ndarray, c2: np.ndarray, sub: int = 24) -> float:
    """Midpoint-rule Gauss double integral ``(1/4pi) sum (r1-r2).(dr1 x dr2)/|r1-r2|^3``."""

    def refine(c):
        nxt = np.roll(c, -1, axis=0)
        t = (np.arange(sub) + 0.5) / sub
        mids = c[:, None, :] + t[None, :, None] * (nxt - c)[:, None, :]
        step = np.repeat(((nxt - c) / sub)[:, None, :], sub, axis=1)
        return mids.reshape(-1, 3), step.reshape(-1, 3)

    p1, d1 = refine(np.asarray(c1, float))
    p2, d2 = refine(np.asarray(c2, float))
    r = p1[:, None, :] - p2[None, :, :]
    cross = np.cross(d1[:, None, :], d2[None, :, :])
    dist3 = np.linalg.norm(r, axis=-1) ** 3
    return float(np.sum(np.einsum("ijk,ijk->ij", r, cross) / dist3) / (4.0 * math.pi))


def abelian_kinetic(phi: np.ndarray, h: float) -> complex:
    """Kinetic WZW term of ``diag(e^phi, e^-phi)`` from scalar stencils only.

    ``(1/2pi) h^2 sum_sites sum_(+-) D_z(e^(+-phi)) D_zbar(e^(-+phi))`` with
    the same central difference, applied to plain scalar arrays.
    """

    def dz(f):
        fx = (np.roll(f, -1, 0) - np.roll(f, 1, 0)) / (2 * h)
        fy = (np.roll(f, -1, 1) - np.roll(f, 1, 1)) / (2 * h)
        return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)

    up, down = np.exp(phi), np.exp(-phi)
    up_z, up_zb = dz(up)
    down_z, down_zb = dz(down)
    density = up_z * down_zb + down_z * up_zb
    return complex(np.sum(density) * h * h / (2 * math.pi))


def all_swap_paths(kinds):
    """Every sequence of adjacent T,W -> W,T exchanges reaching normal order."""
    target = sorted(range(len(kinds)), key=lambda i: kinds[i] == "T")
    rank = {old: pos for pos, old in enumerate(target)}

    def walk(state, path):
        moves = [i for i in range(len(state) - 1) if rank[state[i]] > rank[state[i + 1]]]
        if not moves:
            yield path
            return
        for i in moves:
            nxt = list(state)
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            yield from walk(nxt, path + [(state[i], state[i + 1])])

    yield from walk(list(range(len(kinds))), [])


def path_phase(word, path, k):
    """Turns in ``[0, 1)`` picked up along ``path``, straight from the rule
    ``T(C1) W(C2) = exp(2 pi i l(C1,C2) n1 n2 / k) W(C2) T(C1)``."""
    turns = Fraction(0)
    for a, b in path:
        ea, eb = word.entries[a], word.entries[b]
        assert ea.kind == "T" and eb.kind == "W"
        turns += Fraction(word.l(a, b) * ea.charge * eb.charge, k)
    return turns % 1
