"""Density matrices and pure states with validated invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import HERM_ATOL, PSD_ATOL, SIGMA_1, SIGMA_2, SIGMA_3
from .linalg import herm_eig, hermiticity_defect, kron, partial_trace

TRACE_ATOL = 1e-12
NORM_ATOL = 1e-12


def _dims_tuple(dims) -> tuple:
    out = tuple(int(d) for d in dims)
    if not out or any(d < 1 for d in out):
        raise ValueError(f"subsystem_dims must be positive integers, got {dims!r}")
    return out


@dataclass(frozen=True)
class DensityMatrix:
    """A validated density matrix with tensor-factorization metadata.

    Invariants checked on construction: square with dimension equal to
    the product of ``subsystem_dims``, finite entries, Hermitian within
    1e-12, unit trace within 1e-12, and no eigenvalue below -1e-10.
    """

    matrix: np.ndarray
    subsystem_dims: tuple = field(default=())

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        if not np.isfinite(m).all():
            raise ValueError("density matrix contains non-finite entries")
        dims = _dims_tuple(self.subsystem_dims or (m.shape[0],))
        if int(np.prod(dims)) != m.shape[0]:
            raise ValueError(
                f"matrix dimension {m.shape[0]} != product of subsystem_dims {dims}")
        defect = hermiticity_defect(m)
        if defect > HERM_ATOL:
            raise ValueError(f"density matrix not Hermitian (defect {defect:.3e})")
        tr = m.trace()
        if abs(tr - 1.0) > TRACE_ATOL:
            raise ValueError(f"density matrix trace {tr:.15g} != 1")
        w, _ = herm_eig(m)
        if w[0] < -PSD_ATOL:
            raise ValueError(f"density matrix not PSD (eigenvalue {w[0]:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "subsystem_dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class PureState:
    """A normalized state vector with tensor-factorization metadata."""

    amplitudes: np.ndarray
    subsystem_dims: tuple = field(default=())

    def __post_init__(self):
        v = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not np.isfinite(v).all():
            raise ValueError("amplitudes contain non-finite entries")
        dims = _dims_tuple(self.subsystem_dims or (v.size,))
        if int(np.prod(dims)) != v.size:
            raise ValueError(
                f"vector length {v.size} != product of subsystem_dims {dims}")
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state vector norm {norm:.15g} != 1")
        v.setflags(write=False)
        object.__setattr__(self, "amplitudes", v)
        object.__setattr__(self, "subsystem_dims", dims)

    @property
    def dim(self) -> int:
        return self.amplitudes.size


def _check_sign(sign: str) -> str:
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return sign


def bell_state(sign: str) -> DensityMatrix:
    """Maximally entangled two-qubit projector 1/4 (1 ± σ1σ1 ± σ2σ2 − σ3σ3).

    ``sign='+'`` is the triplet component (|01>+|10>)/sqrt(2);
    ``sign='-'`` the singlet (|01>-|10>)/sqrt(2).
    """
    s = 1.0 if _check_sign(sign) == "+" else -1.0
    m = 0.25 * (np.eye(4, dtype=np.complex128)
                + s * kron(SIGMA_1, SIGMA_1)
                + s * kron(SIGMA_2, SIGMA_2)
                - kron(SIGMA_3, SIGMA_3))
    return DensityMatrix(m, (2, 2))


def bell_pure(sign: str) -> PureState:
    """State-vector form of :func:`bell_state`: (|01> ± |10>)/sqrt(2)."""
    s = 1.0 if _check_sign(sign) == "+" else -1.0
    r = math.sqrt(0.5)
    return PureState(np.array([0.0, r, s * r, 0.0]), (2, 2))


def maximally_mixed(dim: int) -> DensityMatrix:
    """I/dim on a single factor of the given dimension."""
    dim = int(dim)
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    return DensityMatrix(np.eye(dim, dtype=np.complex128) / dim, (dim,))


def from_pure(psi: PureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi|."""
    v = psi.amplitudes
    return DensityMatrix(np.outer(v, v.conj()), psi.subsystem_dims)


def reduced_state(rho: DensityMatrix, keep_index: int) -> DensityMatrix:
    """Partial trace over every factor except ``keep_index``."""
    dims = list(rho.subsystem_dims)
    if len(dims) < 2:
        raise ValueError("reduced_state needs at least two tensor factors")
    if not 0 <= keep_index < len(dims):
        raise ValueError(f"keep_index {keep_index} out of range for {dims}")
    m = rho.matrix
    # trace the discarded factors highest-index first so positions stay valid
    for idx in reversed(range(len(dims))):
        if idx == keep_index:
            continue
        m = partial_trace(m, dims, idx)
        del dims[idx]
    return DensityMatrix(m, (dims[0],))


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2); 1 for pure states, 1/dim for maximally mixed ones."""
    m = rho.matrix
    return float((m @ m).trace().real)
