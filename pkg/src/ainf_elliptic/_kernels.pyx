# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled modular row reduction.  Mirrors :mod:`ainf_elliptic._kernels_py`."""

from libcpp.vector cimport vector
from libc.stdint cimport uint64_t, int64_t

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline uint64_t _mulmod(uint64_t a, uint64_t b, uint64_t p) noexcept nogil:
    # a, b < p < 2**32 so the product fits in 64 bits
    return (a * b) % p


cdef uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p) noexcept nogil:
    cdef uint64_t r = 1
    a %= p
    while e:
        if e & 1:
            r = _mulmod(r, a, p)
        a = _mulmod(a, a, p)
        e >>= 1
    return r


cdef int _reduce(const int64_t[:] indptr, const int64_t[:] indices, const int64_t[:] data,
                 Py_ssize_t nrows, Py_ssize_t ncols, uint64_t p) noexcept nogil:
    cdef vector[int] piv
    cdef vector[vector[int]] pcols
    cdef vector[vector[uint64_t]] pvals
    cdef vector[int] cur_c, tmp_c
    cdef vector[uint64_t] cur_v, tmp_v
    cdef Py_ssize_t i, k, a, b, na, nb
    cdef int rank = 0, lead, slot
    cdef uint64_t f, inv, x, y
    cdef int64_t raw

    piv.resize(ncols, -1)
    for i in range(nrows):
        cur_c.clear()
        cur_v.clear()
        for k in range(indptr[i], indptr[i + 1]):
            raw = data[k] % <int64_t>p
            if raw < 0:
                raw += <int64_t>p
            if raw != 0:
                cur_c.push_back(<int>indices[k])
                cur_v.push_back(<uint64_t>raw)
        while cur_c.size() > 0:
            lead = cur_c[0]
            slot = piv[lead]
            if slot < 0:
                inv = _powmod(cur_v[0], p - 2, p)
                for k in range(<Py_ssize_t>cur_v.size()):
                    cur_v[k] = _mulmod(cur_v[k], inv, p)
                piv[lead] = <int>pcols.size()
                pcols.push_back(cur_c)
                pvals.push_back(cur_v)
                rank += 1
                break
            # cur -= f * pivot, pivot has leading coefficient 1
            f = cur_v[0]
            tmp_c.clear()
            tmp_v.clear()
            na = cur_c.size()
            nb = pcols[slot].size()
            a = 0
            b = 0
            while a < na or b < nb:
                if b >= nb or (a < na and cur_c[a] < pcols[slot][b]):
                    tmp_c.push_back(cur_c[a])
                    tmp_v.push_back(cur_v[a])
                    a += 1
                elif a >= na or pcols[slot][b] < cur_c[a]:
                    y = _mulmod(f, pvals[slot][b], p)
                    if y != 0:
                        tmp_c.push_back(pcols[slot][b])
                        tmp_v.push_back(p - y)
                    b += 1
                else:
                    x = cur_v[a]
                    y = _mulmod(f, pvals[slot][b], p)
                    x = x + p - y
                    if x >= p:
                        x -= p
                    if x != 0:
                        tmp_c.push_back(cur_c[a])
                        tmp_v.push_back(x)
                    a += 1
                    b += 1
            cur_c.swap(tmp_c)
            cur_v.swap(tmp_v)
    return rank


def rank_mod_p(indptr, indices, data, Py_ssize_t ncols, p):
    """Rank over Z/p of a CSR matrix with int64 entries; p must be a prime < 2**32."""
    cdef const int64_t[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int64_t[:] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const int64_t[:] dv = np.ascontiguousarray(data, dtype=np.int64)
    cdef uint64_t pp = <uint64_t>p
    cdef Py_ssize_t nrows = ip.shape[0] - 1
    cdef int r
    if pp >= (<uint64_t>1 << 32):
        raise ValueError("modulus must be below 2**32")
    with nogil:
        r = _reduce(ip, ix, dv, nrows, ncols, pp)
    return r
