"""单次传输链实验服务"""

from typing import Any, Dict, Optional

import numpy as np
from loguru import logger

from ..config_loader import TransferConfig
from ..domain.mbqc import RANDOM, run_transfer_chain
from ..domain.quantum import bloch_coordinates


class TransferService:
    """运行一次传输链并整理成可序列化的记录"""

    def run(self, config: TransferConfig, seed: Optional[int] = None) -> Dict[str, Any]:
        seed = config.seed if seed is None else seed
        rng = np.random.default_rng(seed) if config.outcomes == RANDOM else None
        noise = config.noise_spec()
        logger.info(
            f"[传输] {config.encoding} chain n={config.chain}, strategy={config.strategy}, "
            f"noise={noise.kind.value} Γt={noise.gamma_t}"
        )
        record = run_transfer_chain(
            config.theta,
            config.phi,
            noise=noise,
            encoding=config.encoding,
            n_effective=config.chain,
            strategy=config.strategy,
            outcomes=config.outcomes,
            rng=rng,
        )
        result = record.to_dict()
        result.update(
            {
                "theta": config.theta,
                "phi": config.phi,
                "seed": seed,
                "bloch": list(bloch_coordinates(record.logical_output)),
            }
        )
        logger.info(f"[传输] fidelity={record.fidelity_vs_ideal:.12f}")
        return result
