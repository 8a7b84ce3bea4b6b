"""Bloch 球扫描服务

对每个 (编码, Γt) 把网格上的点并行分发到线程池，gather 按提交顺序收集，
所以输出顺序与并行度无关。标准编码配独立退相位，DFS 编码配集体退相位。
"""

import asyncio
from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np
from loguru import logger

from ..config_loader import SweepConfig
from ..domain.mbqc import ENCODING_DFS, ENCODING_STANDARD, run_transfer_chain, transfer_channel
from ..domain.noise import NoiseKind, NoiseSpec
from ..domain.quantum import bloch_coordinates
from ..domain.tomography import characterize

NOISE_FOR_ENCODING = {
    ENCODING_STANDARD: NoiseKind.INDEPENDENT_DEPHASING,
    ENCODING_DFS: NoiseKind.COLLECTIVE_DEPHASING,
}


@dataclass(frozen=True)
class SweepPoint:
    encoding: str
    gamma_t: float
    theta: float
    phi: float


def sweep_grid(config: SweepConfig) -> List[SweepPoint]:
    thetas = np.linspace(0.0, np.pi / 2, config.theta_points)
    phis = np.linspace(0.0, 2 * np.pi, config.phi_points, endpoint=False)
    return [
        SweepPoint(encoding, float(gamma_t), float(theta), float(phi))
        for encoding in config.encodings
        for gamma_t in config.gamma_t
        for theta in thetas
        for phi in phis
    ]


def noise_for(encoding: str, gamma_t: float) -> NoiseSpec:
    return NoiseSpec(kind=NOISE_FOR_ENCODING[encoding], gamma_t=gamma_t)


class BlochSweepService:
    """并行执行 Bloch 球扫描"""

    def __init__(self, workers: int = 4):
        self.workers = max(1, int(workers))

    def _average_fidelity(self, encoding: str, gamma_t: float, chain: int) -> float:
        channel = transfer_channel(encoding, noise_for(encoding, gamma_t), n_effective=chain)
        return characterize(channel).average_fidelity

    def _run_point(self, point: SweepPoint, chain: int, avg_fidelity: float) -> Dict[str, Any]:
        record = run_transfer_chain(
            point.theta,
            point.phi,
            noise=noise_for(point.encoding, point.gamma_t),
            encoding=point.encoding,
            n_effective=chain,
        )
        x, y, z = bloch_coordinates(record.logical_output)
        return {
            "theta": point.theta,
            "phi": point.phi,
            "gamma_t": point.gamma_t,
            "encoding": point.encoding,
            "bloch_x": x,
            "bloch_y": y,
            "bloch_z": z,
            "fidelity": record.fidelity_vs_ideal,
            "avg_fidelity": avg_fidelity,
        }

    async def run(self, config: SweepConfig) -> List[Dict[str, Any]]:
        semaphore = asyncio.Semaphore(self.workers)

        async def limited(func, *args):
            async with semaphore:
                return await asyncio.to_thread(func, *args)

        pairs = [(e, float(g)) for e in config.encodings for g in config.gamma_t]
        logger.info(f"[扫描] 层析 {len(pairs)} 个 (编码, Γt) 组合，并行度 {self.workers}")
        averages = await asyncio.gather(
            *(limited(self._average_fidelity, e, g, config.chain) for e, g in pairs)
        )
        avg_lookup = dict(zip(pairs, averages))

        points = sweep_grid(config)
        logger.info(f"[扫描] 开始扫描 {len(points)} 个网格点")
        rows = await asyncio.gather(
            *(
                limited(self._run_point, p, config.chain, avg_lookup[(p.encoding, p.gamma_t)])
                for p in points
            )
        )
        logger.info(f"[扫描] 完成 {len(rows)} 条记录")
        return list(rows)
