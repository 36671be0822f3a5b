"""Entanglement fidelity, modified entanglement fidelity, static
fidelity and Wootters concurrence for quantum channels in Kraus form.

The package reproduces a three-qubit control-qubit model in which the
entanglement fidelity of a channel decays even though the channel output
stays maximally entangled, while the modified entanglement fidelity
(maximized over local unitary corrections) tracks the concurrence.

``entfid.BACKEND`` reports which numerical kernel build is active:
``"cython"`` for the compiled extension, ``"python"`` for the pure NumPy
fallback (forced by setting ``ENTFID_PURE_PYTHON=1``).
"""

from ._backend import BACKEND
from .channel_io import (ChannelFormatError, read_channel_file,
                         read_density_file, write_channel_file,
                         write_density_file)
from .channels import (CompletenessError, KrausChannel, apply_channel,
                       apply_local_channel, check_trace_preserving,
                       kraus_from_unitary_env)
from .linalg import (HERM_ATOL, PSD_ATOL, SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3,
                     HermEigResult, dagger, expm_i, herm_eig, kron,
                     partial_trace, sqrtm_psd)
from .metrics import (IDENTITY_PARAMS, LocalUnitaryParams, MefResult,
                      OptimizerConfig, concurrence,
                      entanglement_fidelity_direct,
                      entanglement_fidelity_intrinsic, local_unitary, mef,
                      mef_objective, static_fidelity)
from .scenario import (ScenarioPoint, SweepConfig, SweepError, SweepRow,
                       analytic_concurrence, analytic_ef, analytic_mef,
                       evolved_state, scenario_channel, scenario_hamiltonian,
                       scenario_unitary, sweep)
from .states import (DensityMatrix, PureState, bell_pure, bell_state,
                     from_pure, maximally_mixed, purity, reduced_state)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HERM_ATOL",
    "PSD_ATOL",
    "SIGMA_0",
    "SIGMA_1",
    "SIGMA_2",
    "SIGMA_3",
    "HermEigResult",
    "dagger",
    "expm_i",
    "herm_eig",
    "kron",
    "partial_trace",
    "sqrtm_psd",
    "DensityMatrix",
    "PureState",
    "bell_pure",
    "bell_state",
    "from_pure",
    "maximally_mixed",
    "purity",
    "reduced_state",
    "CompletenessError",
    "KrausChannel",
    "apply_channel",
    "apply_local_channel",
    "check_trace_preserving",
    "kraus_from_unitary_env",
    "IDENTITY_PARAMS",
    "LocalUnitaryParams",
    "MefResult",
    "OptimizerConfig",
    "concurrence",
    "entanglement_fidelity_direct",
    "entanglement_fidelity_intrinsic",
    "local_unitary",
    "mef",
    "mef_objective",
    "static_fidelity",
    "ScenarioPoint",
    "SweepConfig",
    "SweepError",
    "SweepRow",
    "analytic_concurrence",
    "analytic_ef",
    "analytic_mef",
    "evolved_state",
    "scenario_channel",
    "scenario_hamiltonian",
    "scenario_unitary",
    "sweep",
    "ChannelFormatError",
    "read_channel_file",
    "read_density_file",
    "write_channel_file",
    "write_density_file",
    "__version__",
]
