"""单比特过程层析"""
from .characterization import ProcessCharacterization, characterize
from .fidelity import (
    average_fidelity,
    choi_from_images,
    entanglement_fidelity,
    entanglement_fidelity_from_images,
    entanglement_fidelity_from_kraus,
    monte_carlo_average_fidelity,
)
from .models import (
    BASIS_LABELS,
    MATRIX_UNITS,
    PAULI_BASIS,
    BetaTensor,
    ChiMatrix,
    KrausSet,
    complex_rows,
    parse_complex_rows,
)
from .process import (
    ChannelFn,
    ProbeSet,
    channel_from_kraus,
    chi_from_kraus,
    chi_from_lambda,
    kraus_from_chi,
    matrix_unit_images,
    probe_channel,
    reconstruct_offdiagonal,
)
from .reference_channels import (
    chain_dephasing_fidelity,
    chain_dephasing_kraus,
    chain_dephasing_output,
    depolarizing,
    full_dephasing,
    identity_channel,
)

__all__ = [
    "ProcessCharacterization",
    "characterize",
    "average_fidelity",
    "choi_from_images",
    "entanglement_fidelity",
    "entanglement_fidelity_from_images",
    "entanglement_fidelity_from_kraus",
    "monte_carlo_average_fidelity",
    "BASIS_LABELS",
    "MATRIX_UNITS",
    "PAULI_BASIS",
    "BetaTensor",
    "ChiMatrix",
    "KrausSet",
    "complex_rows",
    "parse_complex_rows",
    "ChannelFn",
    "ProbeSet",
    "channel_from_kraus",
    "chi_from_kraus",
    "chi_from_lambda",
    "kraus_from_chi",
    "matrix_unit_images",
    "probe_channel",
    "reconstruct_offdiagonal",
    "chain_dephasing_fidelity",
    "chain_dephasing_kraus",
    "chain_dephasing_output",
    "depolarizing",
    "full_dephasing",
    "identity_channel",
]
