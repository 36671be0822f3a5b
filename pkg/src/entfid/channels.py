"""Quantum operations in Kraus form.

A channel is an ordered list of same-dimension Kraus operators
satisfying the trace-preservation (completeness) relation
sum_j E_j^dag E_j = I.  Channels can be built directly from operator
lists or extracted from a system-environment unitary and an initial
environment state.

Kraus decompositions are not unique, so channel equality is always a
*behavioral* statement (equal action on states), never a comparison of
operator lists.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

from .linalg import herm_eig
from .states import DensityMatrix

#: default tolerance on max |sum E^dag E - I|
COMPLETENESS_ATOL = 1e-10
#: environment eigenvalues below this are dropped during extraction
ENV_WEIGHT_FLOOR = 1e-14
#: extracted operators with no entry above this are dropped as numerically zero
OP_NORM_FLOOR = 1e-14
#: tolerance on max |U^dag U - I| for extraction inputs
UNITARY_ATOL = 1e-10


class CompletenessError(ValueError):
    """Kraus operators fail the trace-preservation relation.

    Carries the measured max-abs deviation in ``deviation``.
    """

    def __init__(self, deviation: float, atol: float):
        super().__init__(
            f"Kraus completeness violated: max |sum E^dag E - I| = "
            f"{deviation:.6e} exceeds {atol:.0e}")
        self.deviation = deviation


def _completeness_deviation(ops) -> float:
    dim = ops[0].shape[0]
    acc = np.zeros((dim, dim), dtype=np.complex128)
    for op in ops:
        acc += op.conj().T @ op
    return float(np.max(np.abs(acc - np.eye(dim))))


class KrausChannel:
    """An ordered set of Kraus operators on a fixed system dimension."""

    def __init__(self, operators, completeness_atol: float = COMPLETENESS_ATOL):
        ops = [np.array(op, dtype=np.complex128) for op in operators]
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        dim = ops[0].shape[0] if ops[0].ndim == 2 else -1
        for op in ops:
            if op.ndim != 2 or op.shape != (dim, dim):
                raise ValueError(
                    f"Kraus operators must all be {dim}x{dim}, got shape {op.shape}")
            if not np.isfinite(op).all():
                raise ValueError("Kraus operator contains non-finite entries")
            op.setflags(write=False)
        deviation = _completeness_deviation(ops)
        if deviation > completeness_atol:
            raise CompletenessError(deviation, completeness_atol)
        self.dim = dim
        self.operators = tuple(ops)

    def __len__(self) -> int:
        return len(self.operators)

    def __repr__(self) -> str:
        return f"KrausChannel(dim={self.dim}, n_ops={len(self.operators)})"


def check_trace_preserving(ch: KrausChannel) -> float:
    """Max-abs deviation of sum E^dag E from the identity."""
    return _completeness_deviation(list(ch.operators))


def kraus_from_unitary_env(u, rho_env: DensityMatrix, sys_dim: int) -> KrausChannel:
    """Extract the Kraus operators of the channel induced on a system by a
    joint unitary acting on system ⊗ environment.

    With the spectral decomposition rho_env = sum_i p_i |i><i| and the
    computational environment basis {|j>}, the operators are

        E_{ij} = sqrt(p_i) <j| U |i>,

    one per pair (i, j), flattened into a single list (i outer).
    Environment eigenstates with p_i < 1e-14 are omitted; the
    completeness relation is re-verified on the surviving set.
    """
    u = np.asarray(u, dtype=np.complex128)
    sys_dim = int(sys_dim)
    if sys_dim < 1:
        raise ValueError(f"sys_dim must be positive, got {sys_dim}")
    env_dim = rho_env.dim
    total = sys_dim * env_dim
    if u.shape != (total, total):
        raise ValueError(
            f"unitary shape {u.shape} does not match system {sys_dim} x "
            f"environment {env_dim}")
    unit_dev = float(np.max(np.abs(u.conj().T @ u - np.eye(total))))
    if unit_dev > UNITARY_ATOL:
        raise ValueError(f"u is not unitary (max |U^dag U - I| = {unit_dev:.3e})")

    p, vecs = herm_eig(rho_env.matrix)
    u4 = u.reshape(sys_dim, env_dim, sys_dim, env_dim)
    ops = []
    for i in range(env_dim):
        if p[i] < ENV_WEIGHT_FLOOR:
            continue
        # blocks[j] = <j| U |i> on the system space, for every env output j
        blocks = np.einsum("sjte,e->jst", u4, vecs[:, i])
        root = np.sqrt(p[i])
        for j in range(env_dim):
            op = root * blocks[j]
            # a unitary diagonal in the environment basis leaves the
            # cross blocks identically zero; keep the list minimal
            if np.max(np.abs(op)) < OP_NORM_FLOOR:
                continue
            ops.append(op)
    return KrausChannel(ops)


def apply_channel(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """rho -> sum_j E_j rho E_j^dag."""
    if rho.dim != ch.dim:
        raise ValueError(f"state dimension {rho.dim} != channel dimension {ch.dim}")
    m = rho.matrix
    out = np.zeros_like(m)
    for op in ch.operators:
        out += op @ m @ op.conj().T
    return DensityMatrix(out, rho.subsystem_dims)


def apply_local_channel(ch: KrausChannel, rho_joint: DensityMatrix,
                        acted_index: int) -> DensityMatrix:
    """Apply a channel to one tensor factor of a joint state, extending
    each Kraus operator by identities on the other factors."""
    dims = rho_joint.subsystem_dims
    if not 0 <= acted_index < len(dims):
        raise ValueError(f"acted_index {acted_index} out of range for {dims}")
    if dims[acted_index] != ch.dim:
        raise ValueError(
            f"factor {acted_index} has dimension {dims[acted_index]}, "
            f"channel needs {ch.dim}")
    m = rho_joint.matrix
    out = np.zeros_like(m)
    eyes = [np.eye(d, dtype=np.complex128) for d in dims]
    for op in ch.operators:
        factors = list(eyes)
        factors[acted_index] = op
        full = reduce(np.kron, factors)
        out += full @ m @ full.conj().T
    return DensityMatrix(out, dims)
