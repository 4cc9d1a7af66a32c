"""Pure-Python twin of the compiled state-sum kernel."""

from __future__ import annotations

import numpy as np


def state_histogram(crossings, n_arcs: int) -> np.ndarray:
    """Histogram of (A-smoothing count, loop count) over all 2**n states."""
    rows = [tuple(int(v) for v in row) for row in np.asarray(crossings).reshape(-1, 4)]
    n = len(rows)
    if n > 30:
        raise ValueError("state enumeration limited to 30 crossings")
    hist = np.zeros((n + 1, n_arcs + 1), dtype=np.int64)

    def find(parent, x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for state in range(1 << n):
        parent = list(range(n_arcs))
        loops = n_arcs
        a_count = 0
        for i, (a, b, c, d) in enumerate(rows):
            if (state >> i) & 1:
                a_count += 1
                pairs = ((a, b), (c, d))
            else:
                pairs = ((a, d), (b, c))
            for x, y in pairs:
                rx, ry = find(parent, x), find(parent, y)
                if rx != ry:
                    parent[ry] = rx
                    loops -= 1
        hist[a_count, loops] += 1
    return hist
