"""Scalar channel/state measures: entanglement fidelity (direct and
intrinsic), static fidelity, Wootters concurrence, and the modified
entanglement fidelity (MEF) obtained by maximizing over local unitary
corrections.

The MEF maximization runs over the three angles (beta, gamma, delta) of
the z-y-z parametrization of a single-qubit unitary.  The overall phase
alpha multiplies every trace by a unimodular factor and cancels inside
|Tr(rho U E_j)|^2, so the optimizer pins it at zero.  The search is a
deterministic coarse grid followed by Nelder-Mead refinement; grid ties
are broken toward the lexicographically smallest (beta, gamma, delta) so
results never depend on evaluation order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._backend import mef_grid_scan, mef_objective as _kernel_objective
from .channels import KrausChannel
from .linalg import SIGMA_2, herm_eig, kron, sqrtm_psd
from .states import DensityMatrix, PureState

TWO_PI = 2.0 * math.pi


def _wrap_angle(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {x!r}")
    r = math.fmod(x, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:  # fmod result of -1e-17 rounds up to 2*pi
        r = 0.0
    return r


@dataclass(frozen=True)
class LocalUnitaryParams:
    """Angles (alpha, beta, gamma, delta) of U = e^{-i alpha} Rz(beta)
    Ry(gamma) Rz(delta), canonicalized to [0, 2*pi)."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, _wrap_angle(getattr(self, name)))


IDENTITY_PARAMS = LocalUnitaryParams(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings for the MEF search."""

    grid_points_per_angle: int = 24
    refine_tolerance: float = 1e-10
    max_refine_iters: int = 500

    def __post_init__(self):
        if self.grid_points_per_angle < 4:
            raise ValueError("grid_points_per_angle must be >= 4")
        if not self.refine_tolerance > 0.0:
            raise ValueError("refine_tolerance must be positive")
        if self.max_refine_iters < 0:
            raise ValueError("max_refine_iters must be >= 0")


@dataclass(frozen=True)
class MefResult:
    value: float
    argmax: LocalUnitaryParams
    evaluations: int


def local_unitary(p: LocalUnitaryParams) -> np.ndarray:
    """The 2x2 unitary e^{-i alpha} Rz(beta) Ry(gamma) Rz(delta)."""
    eb = cmath.exp(-0.5j * p.beta)
    ed = cmath.exp(-0.5j * p.delta)
    cg = math.cos(0.5 * p.gamma)
    sg = math.sin(0.5 * p.gamma)
    u = np.array(
        [[eb * ed * cg, -eb * ed.conjugate() * sg],
         [eb.conjugate() * ed * sg, eb.conjugate() * ed.conjugate() * cg]],
        dtype=np.complex128)
    return cmath.exp(-1j * p.alpha) * u


def entanglement_fidelity_direct(psi_joint: PureState,
                                 rho_after: DensityMatrix) -> float:
    """<Psi| rho' |Psi>: overlap of the evolved joint state with the
    initial pure joint state."""
    if psi_joint.dim != rho_after.dim:
        raise ValueError(
            f"state dimension {psi_joint.dim} != matrix dimension {rho_after.dim}")
    v = psi_joint.amplitudes
    val = v.conj() @ rho_after.matrix @ v
    # Hermiticity of rho' makes this real; the residue is rounding noise
    return min(max(float(val.real), 0.0), 1.0)


def entanglement_fidelity_intrinsic(rho_q: DensityMatrix,
                                    ch: KrausChannel) -> float:
    """sum_j |Tr(rho E_j)|^2, the purification-free form of the EF."""
    if rho_q.dim != ch.dim:
        raise ValueError(f"state dimension {rho_q.dim} != channel dimension {ch.dim}")
    m = rho_q.matrix
    total = 0.0
    for op in ch.operators:
        t = np.trace(m @ op)
        total += t.real * t.real + t.imag * t.imag
    return min(max(total, 0.0), 1.0)


def static_fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Tr sqrt(sqrt(rho) sigma sqrt(rho))."""
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    s = sqrtm_psd(rho.matrix)
    w, _ = herm_eig(s @ sigma.matrix @ s)
    # Eigenvalues at the rounding floor of the triple product are pure noise,
    # but their square roots would still contribute ~1e-8 each to the trace;
    # zero them before summing.
    w = np.clip(w, 0.0, None)
    w[w <= w[-1] * rho.dim * np.finfo(float).eps] = 0.0
    total = float(np.sqrt(w).sum())
    return min(max(total, 0.0), 1.0)


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence of a two-qubit state.

    Defined through the descending eigenvalues lambda_k of
    rho (sigma2 x sigma2) rho* (sigma2 x sigma2) as
    max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).  The product is
    not Hermitian, so the eigenvalues are taken from the spectrally
    equivalent Hermitian matrix sqrt(rho) rho~ sqrt(rho) instead, with
    tiny negative values clamped before the square roots.
    """
    if rho.dim != 4:
        raise ValueError(
            f"concurrence is defined for two-qubit states (dimension 4), "
            f"got dimension {rho.dim}")
    m = rho.matrix
    yy = kron(SIGMA_2, SIGMA_2)
    rho_tilde = yy @ m.conj() @ yy
    s = sqrtm_psd(m)
    w, _ = herm_eig(s @ rho_tilde @ s)
    roots = np.sqrt(np.clip(w, 0.0, None))  # ascending
    c = roots[3] - roots[2] - roots[1] - roots[0]
    return min(max(c, 0.0), 1.0)


def _qubit_products(rho_q: DensityMatrix, ch: KrausChannel) -> np.ndarray:
    if ch.dim != 2 or rho_q.dim != 2:
        raise ValueError(
            f"MEF is implemented for qubit systems only (dimension 2); "
            f"got state dimension {rho_q.dim}, channel dimension {ch.dim}")
    return np.ascontiguousarray(
        np.stack([op @ rho_q.matrix for op in ch.operators]))


def mef_objective(p: LocalUnitaryParams, rho_q: DensityMatrix,
                  ch: KrausChannel) -> float:
    """sum_j |Tr(rho U E_j)|^2 for U = local_unitary(p)."""
    if rho_q.dim != ch.dim:
        raise ValueError(f"state dimension {rho_q.dim} != channel dimension {ch.dim}")
    if ch.dim != 2:
        raise ValueError(
            f"the local-unitary parametrization is for qubits; got dimension {ch.dim}")
    u = local_unitary(p)
    m = rho_q.matrix
    total = 0.0
    for op in ch.operators:
        t = np.trace(m @ u @ op)
        total += t.real * t.real + t.imag * t.imag
    return min(max(total, 0.0), 1.0)


def _simplex_refine(f, x0, step: float, tol: float, max_iters: int):
    """Maximize a smooth f: R^3 -> R by Nelder-Mead from a seed point.

    Returns (best_x, best_f, evaluations).  Entirely deterministic:
    stable ordering, fixed coefficients (reflect 1, expand 2, contract
    0.5, shrink 0.5), stopping on simplex diameter < tol.
    """
    pts = [np.array(x0, dtype=float)]
    for i in range(3):
        v = pts[0].copy()
        v[i] += step
        pts.append(v)
    vals = [f(p) for p in pts]
    evals = 4
    best_x, best_f = None, -math.inf
    for p, v in zip(pts, vals):
        if v > best_f:
            best_x, best_f = p.copy(), v

    for _ in range(max_iters):
        order = sorted(range(4), key=lambda i: -vals[i])
        pts = [pts[i] for i in order]
        vals = [vals[i] for i in order]
        diameter = max(float(np.max(np.abs(pts[i] - pts[0]))) for i in (1, 2, 3))
        if diameter < tol:
            break
        centroid = (pts[0] + pts[1] + pts[2]) / 3.0

        def take(x):
            nonlocal best_x, best_f, evals
            v = f(x)
            evals += 1
            if v > best_f:
                best_x, best_f = x.copy(), v
            return v

        xr = centroid + (centroid - pts[3])
        fr = take(xr)
        if fr > vals[0]:
            xe = centroid + 2.0 * (centroid - pts[3])
            fe = take(xe)
            if fe > fr:
                pts[3], vals[3] = xe, fe
            else:
                pts[3], vals[3] = xr, fr
        elif fr > vals[2]:
            pts[3], vals[3] = xr, fr
        else:
            if fr > vals[3]:  # outside contraction
                xc = centroid + 0.5 * (centroid - pts[3])
                fc = take(xc)
                accept = fc >= fr
            else:  # inside contraction
                xc = centroid - 0.5 * (centroid - pts[3])
                fc = take(xc)
                accept = fc > vals[3]
            if accept:
                pts[3], vals[3] = xc, fc
            else:  # shrink toward the best vertex
                for i in (1, 2, 3):
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0])
                    vals[i] = take(pts[i])
    return best_x, best_f, evals


def mef(rho_q: DensityMatrix, ch: KrausChannel,
        cfg: OptimizerConfig | None = None) -> MefResult:
    """Modified entanglement fidelity: max over single-qubit unitaries U
    of sum_j |Tr(rho U E_j)|^2.

    The global phase alpha is fixed at zero (it cancels in the modulus);
    the three remaining angles are searched on a coarse cubic grid and
    the best cell is refined with a derivative-free simplex.  The grid
    seed includes (0, 0, 0), so the result can never fall below the
    plain entanglement fidelity.
    """
    if cfg is None:
        cfg = OptimizerConfig()
    m = _qubit_products(rho_q, ch)
    n = cfg.grid_points_per_angle
    grid_val, b, g, d = mef_grid_scan(m, n)
    evaluations = n ** 3

    if cfg.max_refine_iters > 0:
        step = math.pi / n  # half the grid spacing
        x, val, extra = _simplex_refine(
            lambda p: _kernel_objective(m, p[0], p[1], p[2]),
            (b, g, d), step, cfg.refine_tolerance, cfg.max_refine_iters)
        evaluations += extra
        if val < grid_val:  # refinement can only tie or win; keep the seed on a tie
            x, val = np.array((b, g, d)), grid_val
    else:
        x, val = np.array((b, g, d)), grid_val

    value = min(max(val, 0.0), 1.0)
    params = LocalUnitaryParams(0.0, x[0], x[1], x[2])
    return MefResult(value, params, evaluations)
