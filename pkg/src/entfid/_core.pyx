# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled build of the numerical kernels.

Mirrors :mod:`entfid._core_py` — same functions, same contracts; see the
docstrings there.  The loops are written out elementwise so the C compiler
emits straight-line floating-point code.
"""

import numpy as np

from libc.math cimport atan2, cos, hypot, sin

BACKEND = "cython"

cdef int _MAX_SWEEPS = 60


def jacobi_eigh(a):
    """Cyclic-Jacobi eigendecomposition of a Hermitian matrix.

    Returns ``(w, v)`` with eigenvalues ascending, eigenvectors in
    columns.
    """
    a = np.asarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0]
    A_arr = np.ascontiguousarray(0.5 * (a + a.conj().T))
    V_arr = np.eye(n, dtype=np.complex128)
    cdef double scale = float(np.max(np.abs(A_arr))) if n else 0.0
    if scale == 0.0:
        return np.zeros(n), V_arr
    cdef double tol = 1e-15 * scale

    cdef double complex[:, ::1] A = A_arr
    cdef double complex[:, ::1] V = V_arr
    cdef Py_ssize_t sweep, p, q, i
    cdef bint rotated
    cdef double complex apq, sw, swc, xp, xq
    cdef double r, app, aqq, theta, c, s

    for sweep in range(_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = hypot(apq.real, apq.imag)
                if r <= tol:
                    continue
                rotated = True
                app = A[p, p].real
                aqq = A[q, q].real
                theta = 0.5 * atan2(2.0 * r, app - aqq)
                c = cos(theta)
                s = sin(theta)
                # rotation phase by division, not trig: exact for real input
                sw = complex(s * (apq.real / r), s * (apq.imag / r))
                swc = sw.conjugate()
                for i in range(n):
                    xp = A[i, p]
                    xq = A[i, q]
                    A[i, p] = c * xp + swc * xq
                    A[i, q] = c * xq - sw * xp
                for i in range(n):
                    xp = A[p, i]
                    xq = A[q, i]
                    A[p, i] = c * xp + sw * xq
                    A[q, i] = c * xq - swc * xp
                A[p, q] = 0
                A[q, p] = 0
                for i in range(n):
                    xp = V[i, p]
                    xq = V[i, q]
                    V[i, p] = c * xp + swc * xq
                    V[i, q] = c * xq - sw * xp
        if not rotated:
            break
    else:
        raise ArithmeticError("jacobi_eigh did not converge")

    w = A_arr.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], V_arr[:, order]


def mef_objective(m, double beta, double gamma, double delta):
    """Fidelity objective sum_j |Tr(U M_j)|^2 at one angle triple."""
    m = np.ascontiguousarray(m, dtype=np.complex128)
    cdef double complex[:, :, ::1] M = m
    cdef Py_ssize_t k = M.shape[0], j
    cdef double complex eb = complex(cos(0.5 * beta), -sin(0.5 * beta))
    cdef double complex ed = complex(cos(0.5 * delta), -sin(0.5 * delta))
    cdef double cg = cos(0.5 * gamma)
    cdef double sg = sin(0.5 * gamma)
    cdef double complex u00 = eb * ed * cg
    cdef double complex u01 = -(eb * ed.conjugate()) * sg
    cdef double complex u10 = (eb.conjugate() * ed) * sg
    cdef double complex u11 = (eb.conjugate() * ed.conjugate()) * cg
    cdef double complex t
    cdef double total = 0.0
    for j in range(k):
        t = u00 * M[j, 0, 0] + u01 * M[j, 1, 0] + u10 * M[j, 0, 1] + u11 * M[j, 1, 1]
        total += t.real * t.real + t.imag * t.imag
    return total


def mef_grid_scan(m, Py_ssize_t n):
    """Maximize the objective on an n^3 angle grid; ties go to the first
    (lexicographically smallest) triple."""
    m = np.ascontiguousarray(m, dtype=np.complex128)
    cdef double complex[:, :, ::1] M = m
    cdef Py_ssize_t k = M.shape[0]

    angles_arr = 2.0 * np.pi * np.arange(n) / n
    e_arr = np.exp(-0.5j * angles_arr)
    cg_arr = np.cos(0.5 * angles_arr)
    sg_arr = np.sin(0.5 * angles_arr)
    cdef double[::1] angles = angles_arr
    cdef double complex[::1] e = e_arr
    cdef double[::1] cg = cg_arr
    cdef double[::1] sg = sg_arr

    cdef Py_ssize_t ib, ig, idd, j, bi = 0, gi = 0, di = 0
    cdef double best = -1.0, f, cgv, sgv
    cdef double complex eb, ebc, ed, edc, u00, u01, u10, u11, t

    for ib in range(n):
        eb = e[ib]
        ebc = eb.conjugate()
        for ig in range(n):
            cgv = cg[ig]
            sgv = sg[ig]
            for idd in range(n):
                ed = e[idd]
                edc = ed.conjugate()
                u00 = eb * ed * cgv
                u01 = -(eb * edc) * sgv
                u10 = (ebc * ed) * sgv
                u11 = (ebc * edc) * cgv
                f = 0.0
                for j in range(k):
                    t = (u00 * M[j, 0, 0] + u01 * M[j, 1, 0]
                         + u10 * M[j, 0, 1] + u11 * M[j, 1, 1])
                    f += t.real * t.real + t.imag * t.imag
                if f > best:
                    best = f
                    bi = ib
                    gi = ig
                    di = idd
    return best, angles[bi], angles[gi], angles[di]
