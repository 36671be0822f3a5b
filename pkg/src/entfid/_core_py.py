"""Pure NumPy implementations of the numerical kernels.

Fallback for :mod:`entfid._core` (the Cython extension) with identical
contracts: a cyclic Jacobi eigensolver for complex Hermitian matrices and
the hot loop of the fidelity optimizer (objective evaluation on a cubic
angle grid).  Selected by :mod:`entfid._backend` when the extension is
missing or ``ENTFID_PURE_PYTHON`` is set.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

BACKEND = "python"

_MAX_SWEEPS = 60


def jacobi_eigh(a):
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
    rotations.

    Returns ``(w, v)`` with eigenvalues ``w`` ascending and orthonormal
    eigenvectors in the columns of ``v``.  The input is symmetrized on
    entry; callers are expected to have checked Hermiticity already.

    The rotation phase is taken as ``a[p,q]/|a[p,q]|`` (a complex
    division, not trig of an angle) so that sign flips of matrix entries
    propagate exactly through the arithmetic.
    """
    a = np.asarray(a, dtype=np.complex128)
    n = a.shape[0]
    A = 0.5 * (a + a.conj().T)
    V = np.eye(n, dtype=np.complex128)

    scale = np.max(np.abs(A)) if n else 0.0
    if scale == 0.0:
        return np.zeros(n), V
    tol = 1e-15 * scale

    for _ in range(_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = abs(apq)
                if r <= tol:
                    continue
                rotated = True
                app = A[p, p].real
                aqq = A[q, q].real
                theta = 0.5 * math.atan2(2.0 * r, app - aqq)
                c = math.cos(theta)
                s = math.sin(theta)
                w = apq / r
                wc = w.conjugate()
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = c * colp + (s * wc) * colq
                A[:, q] = (-s * w) * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = c * rowp + (s * w) * rowq
                A[q, :] = (-s * wc) * rowp + c * rowq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp + (s * wc) * vq
                V[:, q] = (-s * w) * vp + c * vq
        if not rotated:
            break
    else:
        raise ArithmeticError("jacobi_eigh did not converge")

    w = A.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def mef_objective(m, beta, gamma, delta):
    """Fidelity objective sum_j |Tr(U M_j)|^2 at one angle triple.

    ``m`` holds the products E_j @ rho stacked as a (k, 2, 2) array; U is
    the z-y-z rotation with zero overall phase.
    """
    eb = cmath.exp(-0.5j * beta)
    ed = cmath.exp(-0.5j * delta)
    cg = math.cos(0.5 * gamma)
    sg = math.sin(0.5 * gamma)
    u00 = eb * ed * cg
    u01 = -eb * ed.conjugate() * sg
    u10 = eb.conjugate() * ed * sg
    u11 = eb.conjugate() * ed.conjugate() * cg
    total = 0.0
    for j in range(m.shape[0]):
        t = u00 * m[j, 0, 0] + u01 * m[j, 1, 0] + u10 * m[j, 0, 1] + u11 * m[j, 1, 1]
        total += t.real * t.real + t.imag * t.imag
    return total


def mef_grid_scan(m, n):
    """Maximize the fidelity objective on an n^3 grid of (beta, gamma, delta).

    Angles run over {2*pi*i/n}.  Returns ``(value, beta, gamma, delta)``
    for the best grid point; ties resolve to the lexicographically
    smallest triple (argmax of the C-ordered grid).
    """
    angles = 2.0 * np.pi * np.arange(n) / n
    e = np.exp(-0.5j * angles)
    cg = np.cos(0.5 * angles)
    sg = np.sin(0.5 * angles)

    B = e[:, None, None]
    D = e[None, None, :]
    CG = cg[None, :, None]
    SG = sg[None, :, None]
    u00 = B * D * CG
    u01 = -(B * D.conj()) * SG
    u10 = (B.conj() * D) * SG
    u11 = (B.conj() * D.conj()) * CG

    f = np.zeros((n, n, n))
    for j in range(m.shape[0]):
        t = u00 * m[j, 0, 0] + u01 * m[j, 1, 0] + u10 * m[j, 0, 1] + u11 * m[j, 1, 1]
        f += t.real**2 + t.imag**2

    flat = int(np.argmax(f))
    ib, rem = divmod(flat, n * n)
    ig, idd = divmod(rem, n)
    return float(f.flat[flat]), float(angles[ib]), float(angles[ig]), float(angles[idd])
