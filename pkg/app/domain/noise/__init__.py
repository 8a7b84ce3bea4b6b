"""退相干模型与探测界"""
from .channels import (
    COLLECTIVE,
    INDEPENDENT,
    apply_collective_dephasing,
    apply_collective_unitary,
    apply_independent_dephasing,
    apply_noise,
    choi_matrix,
    collective_unitary,
    dephase_register,
    dephasing_kraus,
    jz_eigenvalues,
)
from .detection import no_click_probability_bounds, photon_number
from .models import CollectiveGenerators, NoiseKind, NoiseSpec

__all__ = [
    "COLLECTIVE",
    "INDEPENDENT",
    "apply_collective_dephasing",
    "apply_collective_unitary",
    "apply_independent_dephasing",
    "apply_noise",
    "choi_matrix",
    "collective_unitary",
    "dephase_register",
    "dephasing_kraus",
    "jz_eigenvalues",
    "no_click_probability_bounds",
    "photon_number",
    "CollectiveGenerators",
    "NoiseKind",
    "NoiseSpec",
]
