# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled photon kernels; NumPy twin lives in ``_numpy``.

The transcendental loops are blocked so the compiler can vectorize the
cos/sin evaluations (libmvec) separately from the per-pixel scatter.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()

DEF BLOCK = 4096


def thin_accept(times, u, double visibility, double omega):
    """Thinning mask for a phase-modulated emission rate (see ``_numpy``)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t = np.ascontiguousarray(times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] uu = np.ascontiguousarray(u, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.empty(n, dtype=np.uint8)
    cdef double vp1 = 1.0 + visibility
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = uu[i] * vp1 < 1.0 - visibility * cos(omega * t[i])
    return out.view(np.bool_)


def phasor_bin(pixels, times, double omega, Py_ssize_t n_pixels):
    """Per-pixel accumulation of exp(-i*omega*t) (see ``_numpy``)."""
    cdef cnp.ndarray[cnp.uint32_t, ndim=1] p = np.ascontiguousarray(pixels, dtype=np.uint32)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t = np.ascontiguousarray(times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] re = np.zeros(n_pixels, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] im = np.zeros(n_pixels, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i, j, m
    cdef double w
    cdef double cbuf[BLOCK]
    cdef double sbuf[BLOCK]
    i = 0
    while i < n:
        m = n - i
        if m > BLOCK:
            m = BLOCK
        for j in range(m):
            w = omega * t[i + j]
            cbuf[j] = cos(w)
            sbuf[j] = sin(w)
        for j in range(m):
            re[p[i + j]] += cbuf[j]
            im[p[i + j]] -= sbuf[j]
        i += m
    return re, im


def phasor_bin_parts(parts, double omega, Py_ssize_t n_pixels):
    """phasor_bin over (times, pixels) batches, accumulated in place."""
    re_arr = np.zeros(n_pixels, dtype=np.float64)
    im_arr = np.zeros(n_pixels, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] re = re_arr
    cdef cnp.ndarray[cnp.float64_t, ndim=1] im = im_arr
    cdef cnp.ndarray[cnp.uint32_t, ndim=1] p
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t
    cdef Py_ssize_t n, i, j, m
    cdef double w
    cdef double cbuf[BLOCK]
    cdef double sbuf[BLOCK]
    for times, pixels in parts:
        p = np.ascontiguousarray(pixels, dtype=np.uint32)
        t = np.ascontiguousarray(times, dtype=np.float64)
        n = t.shape[0]
        i = 0
        while i < n:
            m = n - i
            if m > BLOCK:
                m = BLOCK
            for j in range(m):
                w = omega * t[i + j]
                cbuf[j] = cos(w)
                sbuf[j] = sin(w)
            for j in range(m):
                re[p[i + j]] += cbuf[j]
                im[p[i + j]] -= sbuf[j]
            i += m
    return re_arr, im_arr


def spectrum_mags(times, omegas):
    """|sum_n exp(-i*t_n*omega)| per grid frequency (see ``_numpy``)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t = np.ascontiguousarray(times, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] om = np.ascontiguousarray(omegas, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] mags = np.empty(om.shape[0], dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t k, i
    cdef double acc_re, acc_im, w, ph
    for k in range(om.shape[0]):
        w = om[k]
        acc_re = 0.0
        acc_im = 0.0
        for i in range(n):
            ph = w * t[i]
            acc_re += cos(ph)
            acc_im += sin(ph)
        mags[k] = (acc_re * acc_re + acc_im * acc_im) ** 0.5
    return mags
