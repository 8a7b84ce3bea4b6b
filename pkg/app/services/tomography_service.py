"""过程层析服务"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
from loguru import logger

from ..config_loader import TomographyConfig
from ..domain.exceptions import ChannelError, ConfigError
from ..domain.mbqc import ENCODING_DFS, ENCODING_STANDARD, transfer_channel
from ..domain.noise import NoiseKind, NoiseSpec
from ..domain.tomography import (
    KrausSet,
    chain_dephasing_kraus,
    channel_from_kraus,
    characterize,
    full_dephasing,
    identity_channel,
    monte_carlo_average_fidelity,
)
from ..domain.tomography.process import PROBE_STATES, ChannelFn


def load_kraus_file(path: str) -> KrausSet:
    try:
        with Path(path).open("r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read Kraus file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"Kraus file {path} is not valid JSON: {exc}") from exc
    return KrausSet.from_dict(data)


def action_error(a: KrausSet, b: KrausSet) -> float:
    """两个 Kraus 集合作为信道在四个探测态上的最大差异"""
    return max(float(np.abs(a.apply(rho) - b.apply(rho)).max()) for rho in PROBE_STATES)


class TomographyService:
    """构造待刻画的信道，运行层析并整理结果"""

    def build_channel(self, config: TomographyConfig) -> ChannelFn:
        if config.channel == "standard-chain":
            noise = NoiseSpec(kind=NoiseKind.INDEPENDENT_DEPHASING, gamma_t=config.gamma_t)
            return transfer_channel(ENCODING_STANDARD, noise, n_effective=config.chain)
        if config.channel == "dfs-chain":
            noise = NoiseSpec(kind=NoiseKind.COLLECTIVE_DEPHASING, gamma_t=config.gamma_t)
            return transfer_channel(ENCODING_DFS, noise, n_effective=config.chain)
        if config.channel == "kraus-file":
            return channel_from_kraus(load_kraus_file(config.kraus_file))
        if config.channel == "identity":
            return channel_from_kraus(identity_channel())
        return channel_from_kraus(full_dephasing())

    def reference(self, config: TomographyConfig) -> Optional[KrausSet]:
        if config.channel == "standard-chain" and config.chain == 3:
            return chain_dephasing_kraus(config.gamma_t)
        if config.channel == "dfs-chain":
            return identity_channel()
        return None

    def run(self, config: TomographyConfig, seed: Optional[int] = None) -> Dict[str, Any]:
        seed = config.seed if seed is None else seed
        logger.info(f"[层析] channel={config.channel} Γt={config.gamma_t} chain={config.chain}")
        channel = self.build_channel(config)
        result = characterize(channel)
        residual = result.chi.trace_preservation_residual()
        if residual > 1e-8:
            raise ChannelError(f"reconstructed channel is not trace preserving ({residual:.3e})")

        document: Dict[str, Any] = {
            "channel": config.channel,
            "gamma_t": config.gamma_t,
            "chain": config.chain,
            "seed": seed,
            **result.to_dict(),
        }
        reference = self.reference(config)
        if reference is not None:
            document["reference_action_error"] = action_error(result.kraus, reference)
        if config.monte_carlo_samples:
            mean, stderr = monte_carlo_average_fidelity(
                channel, config.monte_carlo_samples, np.random.default_rng(seed)
            )
            document["monte_carlo"] = {
                "samples": config.monte_carlo_samples,
                "mean": mean,
                "stderr": stderr,
            }
        logger.info(
            f"[层析] F_e={result.entanglement_fidelity:.12f} F̄={result.average_fidelity:.12f}"
        )
        return document
