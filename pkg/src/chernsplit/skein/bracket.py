"""Kauffman bracket of a PD code.

Conventions: crossing ``(a, b, c, d)`` (counterclockwise from the incoming
under-arc) has A-smoothing joining ``a-b`` and ``c-d`` and B-smoothing
joining ``a-d`` and ``b-c``. Each closed loop contributes
``d = -A^2 - A^-2``; the empty diagram is 1, so the crossingless unknot is
``d``. At level ``k`` the variable is ``A = exp(i pi / (2 (k + 2)))``, a
primitive root of unity of order ``4 (k + 2)``.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .. import _kernels
from ..errors import DomainError
from ..linkmodel.pd import PDCode
from .cyclotomic import (
    LOOP_VALUE,
    CyclotomicInteger,
    Laurent,
    laurent_add,
    laurent_mul,
    laurent_pow,
    laurent_shift,
)


def check_level(k: int) -> int:
    if isinstance(k, bool) or int(k) != k:
        raise DomainError(f"level must be an integer, got {k!r}")
    k = int(k)
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    return k


def root_order(k: int) -> int:
    """Multiplicative order of A at level ``k``."""
    return 4 * (check_level(k) + 2)


def a_value(k: int) -> complex:
    return cmath.exp(1j * math.pi / (2 * (check_level(k) + 2)))


def _canonical(crossings) -> tuple[tuple[int, int, int, int], ...]:
    labels: dict[int, int] = {}
    out = []
    for c in crossings:
        row = []
        for x in c[:4]:
            if x not in labels:
                labels[x] = len(labels)
            row.append(labels[x])
        out.append(tuple(row))
    return tuple(out)


def _smooth(rest: list[list[int]], pairs: list[list[int]]) -> int:
    """Apply the joins in ``pairs`` to ``rest`` in place; return closed loops."""
    loops = 0
    for i, (x, y) in enumerate(pairs):
        if x == y:
            loops += 1
            continue
        for c in rest:
            for s in range(4):
                if c[s] == y:
                    c[s] = x
        for p in pairs[i + 1 :]:
            for s in range(2):
                if p[s] == y:
                    p[s] = x
    return loops


def _branches(key):
    """Both smoothings of the first crossing: (A-exponent, loops, remainder)."""
    a, b, c, d = key[0]
    for sign, pairs in ((1, [[a, b], [c, d]]), (-1, [[a, d], [b, c]])):
        rest = [list(x) for x in key[1:]]
        loops = _smooth(rest, pairs)
        yield sign, loops, rest


@lru_cache(maxsize=65536)
def _bracket_memo(key) -> tuple[tuple[int, int], ...]:
    if not key:
        return ((0, 1),)
    total: Laurent = {}
    for sign, loops, rest in _branches(key):
        sub = dict(_bracket_memo(_canonical(rest)))
        term = laurent_mul(laurent_shift(sub, sign), laurent_pow(LOOP_VALUE, loops))
        total = laurent_add(total, term)
    return tuple(sorted(total.items()))


def _bracket_naive(key) -> Laurent:
    if not key:
        return {0: 1}
    total: Laurent = {}
    for sign, loops, rest in _branches(key):
        sub = _bracket_naive(tuple(map(tuple, rest)))
        term = laurent_mul(laurent_shift(sub, sign), laurent_pow(LOOP_VALUE, loops))
        total = laurent_add(total, term)
    return total


def bracket_polynomial(pd: PDCode, memoize: bool = True) -> Laurent:
    """Kauffman bracket as a Laurent polynomial in A, ``{exponent: coeff}``.

    Computed by the smoothing recursion on the first remaining crossing.
    With ``memoize`` the recursion caches on a relabelled (canonical) form
    of the remaining crossings; the result is identical either way.
    """
    key = _canonical(pd.crossings)
    core = dict(_bracket_memo(key)) if memoize else _bracket_naive(key)
    return laurent_mul(core, laurent_pow(LOOP_VALUE, pd.free_loops()))


def kauffman_bracket(pd: PDCode, k: int) -> CyclotomicInteger:
    """Exact bracket of ``pd`` at level ``k`` (recursive route)."""
    return CyclotomicInteger.from_laurent(root_order(k), bracket_polynomial(pd))


def state_histogram(pd: PDCode, backend: str | None = None) -> np.ndarray:
    """``hist[a, l]``: number of states with ``a`` A-smoothings and ``l`` loops.

    Loops from crossingless components are not included.
    """
    key = _canonical(pd.crossings)
    n_arcs = 1 + max((x for c in key for x in c), default=-1)
    arr = np.ascontiguousarray(np.array(key, dtype=np.intc).reshape(-1, 4))
    if backend is None:
        fn = _kernels.state_histogram
    elif backend == "python":
        fn = _kernels.python_state_histogram
    elif backend == "cython":
        if _kernels.compiled_state_histogram is None:
            raise RuntimeError("compiled kernel not built")
        fn = _kernels.compiled_state_histogram
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return fn(arr, n_arcs)


def bracket_by_enumeration(pd: PDCode, k: int, backend: str | None = None) -> CyclotomicInteger:
    """Exact bracket at level ``k`` as an explicit sum over all 2**n states.

    Independent of the recursion: states are enumerated by the kernel and
    summed directly in the cyclotomic ring.
    """
    order = root_order(k)
    n = pd.n_crossings
    hist = state_histogram(pd, backend)
    a = CyclotomicInteger.root_power(order, 1)
    a_inv = CyclotomicInteger.root_power(order, -1)
    loop = -(a * a) - a_inv * a_inv
    free = pd.free_loops()
    total = CyclotomicInteger.zero(order)
    for a_count in range(hist.shape[0]):
        for loops in range(hist.shape[1]):
            count = int(hist[a_count, loops])
            if count:
                weight = CyclotomicInteger.root_power(order, 2 * a_count - n)
                total = total + count * weight * loop ** (loops + free)
    return total


def bracket_float(pd: PDCode, k: int) -> complex:
    """Plain floating-point smoothing recursion (no exact arithmetic)."""
    a = a_value(k)
    d = -(a**2) - a**-2

    def rec(key) -> complex:
        if not key:
            return 1.0 + 0j
        total = 0j
        for sign, loops, rest in _branches(key):
            total += a**sign * d**loops * rec(tuple(map(tuple, rest)))
        return total

    return rec(_canonical(pd.crossings)) * d ** pd.free_loops()
