"""单向量子计算协议：有效 CZ、链上信息传输、成对测量结果枚举

传输链的执行顺序：
1. 制备簇态（输入写在第 1 个有效比特上）
2. 一次性施加强度为 Γt 的噪声
3. 依次测量第 1 .. n-1 个有效比特，副产物沿链推进
4. 对最后一个有效比特求约化态并按副产物帧修正
"""
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from ..cluster.builder import build_encoded_cluster, build_standard_cluster
from ..cluster.encoding import decode_pair, encode_pair
from ..cluster.models import DUAL_RAIL, STANDARD, LatticeSpec
from ..exceptions import LatticeError, MeasurementError
from ..noise.channels import apply_noise
from ..noise.models import NoiseSpec
from ..quantum.operators import CZ, HADAMARD
from ..quantum.state import QuantumState, apply_gate, fidelity, partial_trace, projective_measure
from .measurements import (
    measure_computational_pair,
    measure_joint,
    measure_pair_singles,
    simulated_map,
)
from .models import BasisKind, ByproductFrame, ExperimentRecord, MeasurementBasis, MeasurementOutcome

ENCODING_STANDARD = "standard"
ENCODING_DFS = "dfs"
STRATEGY_JOINT = "joint"
STRATEGY_SINGLES = "singles"
FORCED_ZERO = "forced-zero"
RANDOM = "random"

MIN_CHAIN = 2
MAX_CHAIN = 5

ChannelFn = Callable[[QuantumState], QuantumState]
OutcomePlan = Union[str, Sequence]


def apply_effective_cz(
    state: QuantumState, lattice: LatticeSpec, edge: Tuple[int, int]
) -> QuantumState:
    """在两个有效比特的顶层物理比特之间施加 S，等价于逻辑 CZ"""
    if lattice.encoding != DUAL_RAIL:
        raise LatticeError(f"effective CZ needs a dual-rail lattice, got {lattice.encoding}")
    a, c = edge
    return apply_gate(state, CZ, [lattice.top(a), lattice.top(c)])


def input_amplitudes(theta: float, phi: float) -> Tuple[complex, complex]:
    """cos θ|0> + e^{iφ} sin θ|1>"""
    if not (np.isfinite(theta) and np.isfinite(phi)):
        raise MeasurementError(f"input angles must be finite, got θ={theta}, φ={phi}")
    return complex(np.cos(theta)), complex(np.exp(1j * phi) * np.sin(theta))


def ideal_output(mu: complex, nu: complex, angles: Sequence[float]) -> QuantumState:
    """无噪声、无副产物时最后一个比特上的态 Π H R_z(-α_k) |ψ>"""
    psi = np.array([mu, nu], dtype=complex)
    for alpha in angles:
        psi = simulated_map(alpha, 0) @ psi
    return QuantumState(psi)


def _forced_plan(outcomes: OutcomePlan, count: int, strategy: str) -> List[Optional[object]]:
    if outcomes == RANDOM:
        return [None] * count
    if outcomes == FORCED_ZERO:
        zero = (0, 0) if strategy == STRATEGY_SINGLES else 0
        return [zero] * count
    plan = list(outcomes)
    if len(plan) != count:
        raise MeasurementError(f"expected {count} forced outcomes, got {len(plan)}")
    return plan


def _check_chain(n_effective: int, encoding: str, strategy: str) -> None:
    if not MIN_CHAIN <= n_effective <= MAX_CHAIN:
        raise LatticeError(f"chain length must lie in [{MIN_CHAIN}, {MAX_CHAIN}], got {n_effective}")
    if encoding not in (ENCODING_STANDARD, ENCODING_DFS):
        raise LatticeError(f"unknown chain encoding {encoding!r}")
    if strategy not in (STRATEGY_JOINT, STRATEGY_SINGLES):
        raise MeasurementError(f"unknown measurement strategy {strategy!r}")


@dataclass(frozen=True)
class ChainRun:
    outcomes: List[MeasurementOutcome]
    frame: ByproductFrame
    raw_output: QuantumState
    branch_probability: float
    leakage_probability: float


def _run_standard(
    mu: complex,
    nu: complex,
    n: int,
    angles: Sequence[float],
    noise: Optional[NoiseSpec],
    plan: List,
    rng: Optional[np.random.Generator],
) -> ChainRun:
    lattice = LatticeSpec.chain(n, STANDARD)
    state = build_standard_cluster(n, (mu, nu))
    if noise is not None:
        state = apply_noise(state, lattice, noise)

    frame = ByproductFrame()
    outcomes: List[MeasurementOutcome] = []
    probability = 1.0
    for site in range(n - 1):
        alpha = frame.adapted_angle(site, angles[site])
        basis = MeasurementBasis(BasisKind.SINGLE_EQUATORIAL, alpha)
        result = projective_measure(
            state, basis.projectors(), [lattice.top(site)], rng=rng, forced=plan[site]
        )
        state = result.state
        probability *= result.probability
        # 标准簇态上结果 s 直接就是 σ_x^s H R_z(-α) 的 s
        frame = frame.propagate(site, site + 1, result.outcome)
        outcomes.append(MeasurementOutcome(site, basis, (result.outcome,), result.probability))

    raw = partial_trace(state, [lattice.top(n - 1)])
    return ChainRun(outcomes, frame, raw, probability, 0.0)


def _run_dual_rail(
    mu: complex,
    nu: complex,
    n: int,
    angles: Sequence[float],
    noise: Optional[NoiseSpec],
    plan: List,
    strategy: str,
    rng: Optional[np.random.Generator],
) -> ChainRun:
    lattice = LatticeSpec.chain(n, DUAL_RAIL)
    state, _ = build_encoded_cluster(lattice, (mu, nu))
    if noise is not None:
        state = apply_noise(state, lattice, noise)

    frame = ByproductFrame()
    outcomes: List[MeasurementOutcome] = []
    probability = 1.0
    survival = 1.0
    for site in range(n - 1):
        alpha = frame.adapted_angle(site, angles[site])
        if strategy == STRATEGY_JOINT:
            result = measure_joint(
                state, lattice, site, alpha, rng=rng, forced=plan[site],
                frame=frame, successor=site + 1,
            )
            basis = MeasurementBasis(BasisKind.JOINT_PAIR, alpha)
        else:
            result = measure_pair_singles(
                state, lattice, site, alpha, rng=rng, forced=plan[site],
                frame=frame, successor=site + 1,
            )
            basis = MeasurementBasis(BasisKind.SINGLE_EQUATORIAL, alpha)
        state = result.state
        frame = result.frame
        probability *= result.probability
        survival *= 1.0 - result.leakage_probability
        outcomes.append(MeasurementOutcome(site, basis, result.bits, result.probability))

    pair = partial_trace(state, list(lattice.block(n - 1)))
    raw, output_leakage = decode_pair(pair)
    survival *= 1.0 - output_leakage
    return ChainRun(outcomes, frame, raw, probability, max(0.0, 1.0 - survival))


def run_chain_on_amplitudes(
    mu: complex,
    nu: complex,
    noise: Optional[NoiseSpec] = None,
    encoding: str = ENCODING_DFS,
    n_effective: int = 3,
    strategy: str = STRATEGY_JOINT,
    outcomes: OutcomePlan = FORCED_ZERO,
    angles: Optional[Sequence[float]] = None,
    rng: Optional[np.random.Generator] = None,
) -> ExperimentRecord:
    """对任意归一化输入 μ|0> + ν|1> 运行传输链"""
    _check_chain(n_effective, encoding, strategy)
    angles = [0.0] * (n_effective - 1) if angles is None else [float(a) for a in angles]
    if len(angles) != n_effective - 1:
        raise MeasurementError(f"expected {n_effective - 1} measurement angles, got {len(angles)}")
    if outcomes == RANDOM and rng is None:
        raise MeasurementError("random outcomes need an rng")
    plan = _forced_plan(outcomes, n_effective - 1, strategy)

    if encoding == ENCODING_STANDARD:
        run = _run_standard(mu, nu, n_effective, angles, noise, plan, rng)
    else:
        run = _run_dual_rail(mu, nu, n_effective, angles, noise, plan, strategy, rng)

    last = n_effective - 1
    corrected = run.frame.correct(run.raw_output, last)
    target = ideal_output(mu, nu, angles)
    record = ExperimentRecord(
        encoding=encoding,
        strategy=strategy if encoding == ENCODING_DFS else "single",
        chain=n_effective,
        outcomes=run.outcomes,
        byproduct=run.frame,
        raw_output=run.raw_output,
        logical_output=corrected,
        target=target,
        fidelity_vs_ideal=fidelity(corrected, target),
        branch_probability=run.branch_probability,
        leakage_probability=run.leakage_probability,
        noise=None if noise is None else noise.to_dict(),
    )
    logger.debug(
        f"[传输] {encoding}/{record.strategy} n={n_effective}: "
        f"bits={[o.bits for o in run.outcomes]} fidelity={record.fidelity_vs_ideal:.12f}"
    )
    return record


def run_transfer_chain(
    theta: float,
    phi: float,
    noise: Optional[NoiseSpec] = None,
    encoding: str = ENCODING_DFS,
    n_effective: int = 3,
    strategy: str = STRATEGY_JOINT,
    outcomes: OutcomePlan = FORCED_ZERO,
    angles: Optional[Sequence[float]] = None,
    rng: Optional[np.random.Generator] = None,
) -> ExperimentRecord:
    """
    把 cos θ|0> + e^{iφ} sin θ|1> 从链的第一个有效比特传到最后一个。

    默认所有测量强制取 s = 0，测量角全为 0；n = 3 时理想输出就是输入态。
    """
    mu, nu = input_amplitudes(theta, phi)
    return run_chain_on_amplitudes(
        mu, nu, noise=noise, encoding=encoding, n_effective=n_effective,
        strategy=strategy, outcomes=outcomes, angles=angles, rng=rng,
    )


SPECTRAL_FLOOR = 1e-14


def transfer_channel(
    encoding: str,
    noise: Optional[NoiseSpec] = None,
    n_effective: int = 3,
    strategy: str = STRATEGY_JOINT,
    corrected: bool = True,
) -> ChannelFn:
    """
    把传输链包装成单比特信道（强制 s = 0 分支）。

    混态输入按谱分解逐个本征态运行，再按 λ_k · p_k（分支概率）加权归一。
    """
    _check_chain(n_effective, encoding, strategy)

    def channel(rho: QuantumState) -> QuantumState:
        if rho.num_qubits != 1:
            raise MeasurementError("transfer channel acts on a single logical qubit")
        if rho.is_pure:
            components = [(1.0, rho.data)]
        else:
            values, vectors = np.linalg.eigh(rho.data)
            components = [
                (float(v), vectors[:, k]) for k, v in enumerate(values) if v > SPECTRAL_FLOOR
            ]
        total = np.zeros((2, 2), dtype=complex)
        weight = 0.0
        for value, vec in components:
            vec = vec / np.linalg.norm(vec)
            record = run_chain_on_amplitudes(
                vec[0], vec[1], noise=noise, encoding=encoding,
                n_effective=n_effective, strategy=strategy,
            )
            output = record.logical_output if corrected else record.raw_output
            w = value * record.branch_probability
            total += w * output.density_matrix()
            weight += w
        return QuantumState(total / weight)

    return channel


@dataclass(frozen=True)
class PairOutcomeRow:
    outcome: Tuple[int, int]
    probability: float
    pair_state: np.ndarray
    logical_map: np.ndarray
    byproduct: np.ndarray
    expected_state: np.ndarray
    fidelity: float

    def to_dict(self) -> dict:
        return {
            "outcome": "".join(str(b) for b in self.outcome),
            "probability": self.probability,
            "pair_state": self.pair_state,
            "logical_map": self.logical_map,
            "byproduct": self.byproduct,
            "fidelity": self.fidelity,
        }


def enumerate_pair_outcomes(mu: complex, nu: complex) -> List[PairOutcomeRow]:
    """
    两有效比特的编码簇态上，对第一对做 H⊗H 后的计算基测量，枚举全部四种结果。

    expected_state 是 U_Σ H|ψ> 的编码态，与第二对的实际态比较（忽略全局相位）。
    """
    lattice = LatticeSpec.chain(2, DUAL_RAIL)
    state, _ = build_encoded_cluster(lattice, (mu, nu))
    psi = np.array([mu, nu], dtype=complex)

    rows: List[PairOutcomeRow] = []
    for bits in ((0, 0), (0, 1), (1, 0), (1, 1)):
        result = measure_computational_pair(state, lattice, 0, apply_hadamards=True, forced=bits)
        # 第一对已处于 |b1 b2>，第二对的向量就是对应的行
        matrix = result.state.data.reshape(4, 4)
        pair_state = np.array(matrix[2 * bits[0] + bits[1], :])
        logical_map = result.byproduct @ HADAMARD
        logical = logical_map @ psi
        expected = encode_pair(logical[0], logical[1])
        rows.append(
            PairOutcomeRow(
                outcome=bits,
                probability=result.probability,
                pair_state=pair_state,
                logical_map=logical_map,
                byproduct=result.byproduct,
                expected_state=expected,
                fidelity=float(abs(np.vdot(expected, pair_state)) ** 2),
            )
        )
    return rows
