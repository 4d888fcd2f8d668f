# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the window kernels in :mod:`coxq._kernels_py`."""

from coxq._kernels_py import EnumerationLimitError

from libc.stdlib cimport malloc, free


cdef long _floordiv(long a, long b) nogil:
    # b > 0
    if a >= 0:
        return a // b
    return -((-a + b - 1) // b)


cdef long _length(long* w, int n) nogil:
    cdef long total = 0
    cdef long d
    cdef int j, p
    for j in range(n):
        for p in range(n):
            d = w[p] - w[j]
            if d > 0:
                if p < j:
                    total += 1
                total += _floordiv(d - 1, n)
    return total


def window_length(window, int n):
    cdef long* w = <long*> malloc(n * sizeof(long))
    cdef int k
    try:
        for k in range(n):
            w[k] = window[k]
        return _length(w, n)
    finally:
        free(w)


def has_descent(window, int i, int n):
    if i == 0:
        return <long> window[n - 1] - n > <long> window[0]
    return <long> window[i - 1] > <long> window[i]


cdef tuple _right_mult(long* w, int i, int n):
    cdef list out = [w[k] for k in range(n)]
    if i == 0:
        out[0] = w[n - 1] - n
        out[n - 1] = w[0] + n
    else:
        out[i - 1] = w[i]
        out[i] = w[i - 1]
    return tuple(out)


def right_mult(window, int i, int n):
    cdef long* w = <long*> malloc(n * sizeof(long))
    cdef int k
    try:
        for k in range(n):
            w[k] = window[k]
        return _right_mult(w, i, n)
    finally:
        free(w)


def ball_levels(int n, int max_len, gens, long cap):
    cdef long* w = <long*> malloc(n * sizeof(long))
    cdef int k, i, step
    cdef bint desc
    cdef long count = 1
    cdef list gen_list = [int(g) for g in gens]
    cdef list frontier = [tuple(range(1, n + 1))]
    cdef list levels = [frontier]
    cdef set nxt
    try:
        for step in range(max_len):
            nxt = set()
            for win in frontier:
                for k in range(n):
                    w[k] = win[k]
                for i in gen_list:
                    if i == 0:
                        desc = w[n - 1] - n > w[0]
                    else:
                        desc = w[i - 1] > w[i]
                    if not desc:
                        nxt.add(_right_mult(w, i, n))
            if not nxt:
                break
            count += len(nxt)
            if count > cap:
                raise EnumerationLimitError(
                    f"ball enumeration exceeded cap of {cap} elements (set COXQ_MAX_BALL)"
                )
            frontier = sorted(nxt)
            levels.append(frontier)
        return levels
    finally:
        free(w)
