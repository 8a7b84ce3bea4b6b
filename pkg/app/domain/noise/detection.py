"""荧光探测置信度

N 是探测脉冲期间散射的光子数，η' 是单光子被探测到的效率。
若未探测到光子，该事件本身的概率上下界为
    e^{-(1+η'/2)η'N} <= P_0^d <= (1+2η'/3)e^{-η'N}
上界在 N 较小时会超过 1，这里保留原始形式不截断。
"""
from typing import Tuple

import numpy as np

from ..exceptions import NoiseSpecError


def photon_number(pulse_time: float, lifetime: float) -> float:
    """N = τ_p / A^{-1}"""
    if not np.isfinite(pulse_time) or pulse_time < 0:
        raise NoiseSpecError(f"pulse_time must be a non-negative real, got {pulse_time}")
    if not np.isfinite(lifetime) or lifetime <= 0:
        raise NoiseSpecError(f"lifetime must be positive, got {lifetime}")
    return pulse_time / lifetime


def no_click_probability_bounds(eta_prime: float, n_photons: float) -> Tuple[float, float]:
    if not np.isfinite(eta_prime) or not 0.0 <= eta_prime <= 1.0:
        raise NoiseSpecError(f"eta_prime must lie in [0, 1], got {eta_prime}")
    if not np.isfinite(n_photons) or n_photons < 0:
        raise NoiseSpecError(f"n_photons must be a non-negative real, got {n_photons}")
    lower = float(np.exp(-(1.0 + eta_prime / 2) * eta_prime * n_photons))
    upper = float((1.0 + 2 * eta_prime / 3) * np.exp(-eta_prime * n_photons))
    return lower, upper
