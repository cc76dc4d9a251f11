# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops; must agree exactly with _kernels_py."""

import numpy as np
cimport numpy as cnp


def hook_lengths(parts):
    cdef list p = list(parts)
    cdef int n = len(p)
    if n == 0:
        return []
    cdef int w = p[0]
    cdef int i, j
    cdef list conj = [0] * w
    for i in range(n):
        for j in range(<int>p[i]):
            conj[j] += 1
    cdef list out = []
    for i in range(n):
        for j in range(<int>p[i]):
            out.append(<int>p[i] - j + <int>conj[j] - i - 1)
    return out


cdef list _hooks(list src, set present):
    cdef list out = []
    cdef int z, w
    for z in src:
        for w in range(z):
            if w not in present:
                out.append(z - w)
    return out


def beta_hooks(beta):
    cdef list b = list(beta)
    return _hooks(b, set(b))


def cross_hooks(src, other):
    return _hooks(list(src), set(other))


def structure_constants(class_of, cols, int nclasses):
    cdef cnp.int64_t[:] co = np.ascontiguousarray(class_of, dtype=np.int64)
    cdef cnp.int64_t[:, :] cc = np.ascontiguousarray(cols, dtype=np.int64).reshape(len(cols), co.shape[0])
    cdef Py_ssize_t nk = cc.shape[0], n = co.shape[0]
    cdef cnp.int64_t[:, :, :] out = np.zeros((nk, nclasses, nclasses), dtype=np.int64)
    cdef Py_ssize_t k, x
    for k in range(nk):
        for x in range(n):
            out[k, co[x], cc[k, x]] += 1
    return np.asarray(out).tolist()
