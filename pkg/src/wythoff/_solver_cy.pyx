# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled retrograde solver kernel.

Behavioral twin of ``_solver_py.solve_into_bits``; see that module for the
table layout.  Coordinates and indices are kept in 64-bit signed words, which
covers any box the cell budget allows.
"""

from libc.stdlib cimport free, malloc

NAME = "cython"


def solve_into_bits(int n, long long bound, vectors, unsigned char[::1] bits):
    cdef int nv = len(vectors)
    cdef long long cells = 1
    cdef int i, j
    cdef long long idx, off, step, kmax, q, c, k
    cdef int is_p
    cdef long long *strides = <long long *> malloc(n * sizeof(long long))
    cdef long long *coords = <long long *> malloc(n * sizeof(long long))
    cdef long long *vflat = <long long *> malloc(nv * n * sizeof(long long))
    cdef long long *vstep = <long long *> malloc(nv * sizeof(long long))
    if strides == NULL or coords == NULL or vflat == NULL or vstep == NULL:
        free(strides); free(coords); free(vflat); free(vstep)
        raise MemoryError()
    try:
        strides[n - 1] = 1
        for i in range(n - 2, -1, -1):
            strides[i] = strides[i + 1] * bound
        for j in range(nv):
            vstep[j] = 0
            for i in range(n):
                vflat[j * n + i] = vectors[j][i]
                vstep[j] += vflat[j * n + i] * strides[i]
        for i in range(n):
            cells *= bound
            coords[i] = 0

        with nogil:
            for idx in range(cells):
                is_p = 1
                for j in range(nv):
                    kmax = -1
                    for i in range(n):
                        c = vflat[j * n + i]
                        if c > 0:
                            q = coords[i] // c
                            if kmax < 0 or q < kmax:
                                kmax = q
                    off = idx
                    step = vstep[j]
                    for k in range(kmax):
                        off -= step
                        if bits[off >> 3] & (1 << (off & 7)):
                            is_p = 0
                            break
                    if is_p == 0:
                        break
                if is_p:
                    bits[idx >> 3] |= 1 << (idx & 7)
                for i in range(n - 1, -1, -1):
                    coords[i] += 1
                    if coords[i] < bound:
                        break
                    coords[i] = 0
    finally:
        free(strides)
        free(coords)
        free(vflat)
        free(vstep)
