# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernel for the Kauffman bracket enumeration."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline int _union(int* parent, int x, int y) noexcept nogil:
    cdef int rx = _find(parent, x)
    cdef int ry = _find(parent, y)
    if rx == ry:
        return 0
    parent[ry] = rx
    return 1


def state_histogram(const int[:, ::1] crossings, int n_arcs):
    """Histogram of (A-smoothing count, loop count) over all 2**n states.

    ``crossings`` holds arc ids in ``0 .. n_arcs - 1``; every id must occur
    exactly twice. Bit ``i`` of the state index selects the A-smoothing at
    crossing ``i``.
    """
    cdef Py_ssize_t n = crossings.shape[0]
    if n > 30:
        raise ValueError("state enumeration limited to 30 crossings")
    cdef cnp.ndarray[cnp.int64_t, ndim=2] hist = np.zeros((n + 1, n_arcs + 1), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] h = hist
    cdef int[::1] parent_buf = np.empty(max(n_arcs, 1), dtype=np.intc)
    cdef int* parent = &parent_buf[0]
    cdef long long state, n_states = 1LL << n
    cdef Py_ssize_t i
    cdef int a_count, loops
    with nogil:
        for state in range(n_states):
            for i in range(n_arcs):
                parent[i] = <int>i
            loops = n_arcs
            a_count = 0
            for i in range(n):
                if (state >> i) & 1:
                    a_count += 1
                    loops -= _union(parent, crossings[i, 0], crossings[i, 1])
                    loops -= _union(parent, crossings[i, 2], crossings[i, 3])
                else:
                    loops -= _union(parent, crossings[i, 0], crossings[i, 3])
                    loops -= _union(parent, crossings[i, 1], crossings[i, 2])
            h[a_count, loops] += 1
    return hist
