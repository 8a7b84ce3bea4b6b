"""一站式信道刻画：探测、χ、Kraus 与保真度"""
from dataclasses import dataclass

from loguru import logger

from .fidelity import average_fidelity, entanglement_fidelity_from_images
from .models import ChiMatrix, KrausSet
from .process import (
    ChannelFn,
    ProbeSet,
    chi_from_lambda,
    kraus_from_chi,
    matrix_unit_images,
    probe_channel,
)


@dataclass(frozen=True)
class ProcessCharacterization:
    probes: ProbeSet
    chi: ChiMatrix
    kraus: KrausSet
    entanglement_fidelity: float
    average_fidelity: float

    def to_dict(self) -> dict:
        return {
            **self.chi.to_dict(),
            "kraus": self.kraus.to_dict()["kraus"],
            "trace_preservation_residual": self.chi.trace_preservation_residual(),
            "entanglement_fidelity": self.entanglement_fidelity,
            "average_fidelity": self.average_fidelity,
        }


def characterize(channel: ChannelFn) -> ProcessCharacterization:
    probes = probe_channel(channel)
    images = matrix_unit_images(probes)
    chi = chi_from_lambda(images)
    kraus = kraus_from_chi(chi)
    f_e = entanglement_fidelity_from_images(images)
    logger.debug(f"[层析] {len(kraus.operators)} Kraus operators, F_e={f_e:.12f}")
    return ProcessCharacterization(
        probes=probes,
        chi=chi,
        kraus=kraus,
        entanglement_fidelity=f_e,
        average_fidelity=average_fidelity(f_e),
    )
