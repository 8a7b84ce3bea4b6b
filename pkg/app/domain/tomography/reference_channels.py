"""已知闭式的参考信道，用作层析与传输链的对照

退相位三比特链的逻辑信道（τ = Γt，C = cosh(τ/4)，S = sinh(τ/4)）：
    K_1 = e^{-3τ/8} √(S cosh(τ/2)) σ_x
    K_2 = e^{-3τ/8} √(C cosh(τ/2)) 1
    K_3 = e^{-3τ/8} C √(2S) σ_z
    K_4 = -i e^{-3τ/8} S √(2C) σ_y
它把 Bloch 向量的 x, y, z 分量分别压缩 e^{-τ}, e^{-3τ/2}, e^{-τ/2}。
"""
import numpy as np

from ..exceptions import ChannelError
from ..quantum.operators import I2, SIGMA_X, SIGMA_Y, SIGMA_Z
from .models import KrausSet


def _check_tau(tau: float) -> None:
    if not np.isfinite(tau) or tau < 0:
        raise ChannelError(f"tau must be a non-negative real, got {tau}")


def chain_dephasing_kraus(tau: float) -> KrausSet:
    _check_tau(tau)
    c, s = np.cosh(tau / 4), np.sinh(tau / 4)
    scale = np.exp(-3 * tau / 8)
    return KrausSet.of(
        [
            scale * np.sqrt(s * np.cosh(tau / 2)) * SIGMA_X,
            scale * np.sqrt(c * np.cosh(tau / 2)) * I2,
            scale * c * np.sqrt(2 * s) * SIGMA_Z,
            -1j * scale * s * np.sqrt(2 * c) * SIGMA_Y,
        ]
    )


def chain_dephasing_output(theta: float, phi: float, tau: float) -> np.ndarray:
    """
    输入 cos θ|0> + e^{iφ} sin θ|1> 经三比特链传输后的输出密度矩阵：
        ρ_00 - ρ_11 = e^{-τ/2} cos 2θ
        ρ_01 = (sin 2θ / 2)(e^{-τ} cos φ - i e^{-3τ/2} sin φ)
    """
    _check_tau(tau)
    population = np.exp(-tau / 2) * np.cos(2 * theta)
    coherence = np.sin(2 * theta) / 2 * (
        np.exp(-tau) * np.cos(phi) - 1j * np.exp(-1.5 * tau) * np.sin(phi)
    )
    return np.array(
        [[(1 + population) / 2, coherence], [np.conj(coherence), (1 - population) / 2]],
        dtype=complex,
    )


def chain_dephasing_fidelity(tau: float) -> float:
    """F_e = e^{-3τ/4} cosh(τ/4) cosh(τ/2)"""
    _check_tau(tau)
    return float(np.exp(-0.75 * tau) * np.cosh(tau / 4) * np.cosh(tau / 2))


def identity_channel() -> KrausSet:
    return KrausSet.of([I2])


def full_dephasing() -> KrausSet:
    return KrausSet.of([np.sqrt(0.5) * I2, np.sqrt(0.5) * SIGMA_Z])


def depolarizing(p: float) -> KrausSet:
    """ρ -> (1-p)ρ + p·1/2；p = 1 时 F_e = 1/4"""
    if not 0.0 <= p <= 1.0:
        raise ChannelError(f"depolarizing strength must lie in [0, 1], got {p}")
    return KrausSet.of(
        [np.sqrt(1 - 3 * p / 4) * I2]
        + [np.sqrt(p / 4) * pauli for pauli in (SIGMA_X, SIGMA_Y, SIGMA_Z)]
    )
