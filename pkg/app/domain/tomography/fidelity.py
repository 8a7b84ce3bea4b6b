"""纠缠保真度与平均保真度"""
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import ChannelError
from ..quantum.random import haar_vectors
from .models import MATRIX_UNITS, KrausSet
from .process import ChannelFn, matrix_unit_images, probe_channel

BELL = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def choi_from_images(images: Sequence[np.ndarray]) -> np.ndarray:
    """(1 ⊗ E)(|b><b|) = (1/2) Σ_{ij} |i><j| ⊗ E(|i><j|)"""
    return sum(np.kron(MATRIX_UNITS[j], images[j]) for j in range(4)) / 2


def entanglement_fidelity_from_images(images: Sequence[np.ndarray]) -> float:
    choi = choi_from_images(images)
    value = float(np.vdot(BELL, choi @ BELL).real)
    return min(max(value, 0.0), 1.0)


def entanglement_fidelity(channel: ChannelFn) -> float:
    """F_e = <b|(1 ⊗ E)(|b><b|)|b>，|b> = (|00> + |11>)/√2"""
    return entanglement_fidelity_from_images(matrix_unit_images(probe_channel(channel)))


def entanglement_fidelity_from_kraus(kraus: KrausSet) -> float:
    """F_e = Σ_i |Tr K_i / 2|²"""
    return float(sum(abs(np.trace(op) / 2) ** 2 for op in kraus.operators))


def average_fidelity(entanglement: float) -> float:
    """F̄ = (2F_e + 1)/3"""
    if not np.isfinite(entanglement) or not -1e-12 <= entanglement <= 1 + 1e-12:
        raise ChannelError(f"entanglement fidelity must lie in [0, 1], got {entanglement}")
    return (2 * entanglement + 1) / 3


def monte_carlo_average_fidelity(
    channel: ChannelFn, samples: int, rng: np.random.Generator
) -> Tuple[float, float]:
    """
    对 Haar 随机纯态求 <ψ|E(|ψ><ψ|)|ψ> 的均值与标准误。

    E 是线性的，只需探测一次得到矩阵单位的像，再批量组合。
    """
    if samples < 2:
        raise ChannelError("Monte-Carlo averaging needs at least two samples")
    images = np.stack(matrix_unit_images(probe_channel(channel))).reshape(2, 2, 2, 2)
    psi = haar_vectors(samples, 2, rng)
    values = np.einsum(
        "sa,jkab,sb,sj,sk->s", psi.conj(), images, psi, psi, psi.conj(), optimize=True
    ).real
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(samples))
