"""Dense complex matrix algebra for small multi-qubit problems.

Everything here operates on plain ``numpy.ndarray`` values with dtype
complex128.  The Hermitian eigensolver is a cyclic Jacobi method (see
:mod:`entfid._backend`): the matrices in this package are at most 8x8,
where Jacobi is simple, unconditionally convergent, and more than fast
enough.  Matrix exponentials are supported only for Hermitian
generators, which is all the physics needs.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from ._backend import jacobi_eigh

#: max-abs asymmetry tolerated before a matrix is rejected as non-Hermitian
HERM_ATOL = 1e-12
#: most negative eigenvalue tolerated (and clamped) in PSD contexts
PSD_ATOL = 1e-10

SIGMA_0 = np.eye(2, dtype=np.complex128)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)


class HermEigResult(NamedTuple):
    """Spectral decomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; the columns of
    ``eigenvectors`` are the matching orthonormal eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(a, name: str = "matrix") -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} contains non-finite entries")
    return m


def hermiticity_defect(a) -> float:
    """Max-abs deviation of ``a`` from its conjugate transpose."""
    m = np.asarray(a, dtype=np.complex128)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def kron(a, b) -> np.ndarray:
    """Kronecker product, row-major with the left factor as the outer
    (slow) index — i.e. the standard |a> ⊗ |b> ordering."""
    return np.kron(np.asarray(a, dtype=np.complex128),
                   np.asarray(b, dtype=np.complex128))


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=np.complex128).conj().T.copy()


def partial_trace(m, dims: Sequence[int], traced_index: int) -> np.ndarray:
    """Trace out one tensor factor of a square matrix.

    Parameters
    ----------
    m : array_like
        Square matrix on the full product space.
    dims : sequence of int
        Dimensions of the tensor factors, outer factor first.
    traced_index : int
        Which factor to trace out (0-based).

    Returns
    -------
    numpy.ndarray
        Matrix on the remaining factors, in the original order.
    """
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise ValueError(f"factor dimensions must be positive, got {dims}")
    total = int(np.prod(dims))
    m = _as_square(m)
    if m.shape[0] != total:
        raise ValueError(
            f"matrix dimension {m.shape[0]} != product of factors {dims}")
    if not 0 <= traced_index < len(dims):
        raise ValueError(f"traced_index {traced_index} out of range for {dims}")
    t = m.reshape(dims + dims)
    t = np.trace(t, axis1=traced_index, axis2=traced_index + len(dims))
    keep = total // dims[traced_index]
    return np.ascontiguousarray(t.reshape(keep, keep))


def herm_eig(h) -> HermEigResult:
    """Eigendecomposition of a Hermitian matrix.

    Raises ``ValueError`` when the input deviates from Hermiticity by
    more than ``HERM_ATOL`` in any entry.
    """
    m = _as_square(h)
    defect = hermiticity_defect(m)
    if defect > HERM_ATOL:
        raise ValueError(
            f"matrix is not Hermitian (max asymmetry {defect:.3e} > {HERM_ATOL:.0e})")
    w, v = jacobi_eigh(m)
    return HermEigResult(w, v)


def expm_i(h, t: float) -> np.ndarray:
    """Unitary e^{-i t H} for Hermitian H, via eigendecomposition."""
    w, v = herm_eig(h)
    phases = np.exp(-1j * float(t) * w)
    return (v * phases) @ v.conj().T


def sqrtm_psd(p) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-PSD_ATOL, 0) are clamped to zero; anything more
    negative raises ``ValueError``.
    """
    w, v = herm_eig(p)
    if w.size and w[0] < -PSD_ATOL:
        raise ValueError(
            f"matrix is not PSD: eigenvalue {w[0]:.3e} < -{PSD_ATOL:.0e}")
    roots = np.sqrt(np.clip(w, 0.0, None))
    return (v * roots) @ v.conj().T
