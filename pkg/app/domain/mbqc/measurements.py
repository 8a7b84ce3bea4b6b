"""编码比特对上的三种测量

- 联合测量 B(α) = {|ψ^{+α}>, |ψ^{-α}>}，补上泄漏投影
- 成对单比特测量：i'_1 测 B(α)，i'_2 测 B(0)
- 计算基测量（可选先施加 H⊗H），对应荧光探测方案

结果 0 对应 |ψ^{+α}>，在双轨码上就是逻辑态 |-α>，
所以联合测量模拟的逻辑变换为 σ_x^{s⊕1} H R_z(-α)。
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from ..cluster.models import DUAL_RAIL, LatticeSpec
from ..exceptions import LatticeError, LeakageDetected, MeasurementError
from ..quantum.operators import HADAMARD, SIGMA_X, rz
from ..quantum.state import QuantumState, apply_gate, outcome_probabilities, projective_measure
from .models import LEAKAGE_OUTCOME, BasisKind, ByproductFrame, MeasurementBasis


def simulated_map(alpha: float, t: int) -> np.ndarray:
    """σ_x^t H R_z(-α)"""
    return np.linalg.matrix_power(SIGMA_X, t & 1) @ HADAMARD @ rz(-alpha)


@dataclass(frozen=True)
class PairMeasurement:
    """
    一次测量的结果。

    - bits: 联合测量为 (s,)，成对测量为 (s_1, s_2)
    - byproduct_bit: 模拟变换 σ_x^t H R_z(-α) 中的 t
    - frame: 更新后的副产物帧（给定 successor 时已推到后继比特）
    """

    bits: Tuple[int, ...]
    probability: float
    state: QuantumState
    byproduct_bit: int
    frame: ByproductFrame
    leakage_probability: float = 0.0

    def logical_map(self, alpha: float) -> np.ndarray:
        return simulated_map(alpha, self.byproduct_bit)


def _require_dual_rail(lattice: LatticeSpec, effective_qubit: int) -> Tuple[int, ...]:
    if lattice.encoding != DUAL_RAIL:
        raise LatticeError(f"pair measurements need a dual-rail lattice, got {lattice.encoding}")
    return lattice.block(effective_qubit)


def _advance(
    frame: Optional[ByproductFrame], measured: int, successor: Optional[int], t: int
) -> ByproductFrame:
    frame = frame or ByproductFrame()
    if successor is None:
        return frame
    return frame.propagate(measured, successor, t)


def _as_pair(forced) -> Tuple[Optional[int], Optional[int]]:
    if forced is None:
        return None, None
    first, second = forced
    return int(first), int(second)


def measure_joint(
    state: QuantumState,
    lattice: LatticeSpec,
    effective_qubit: int,
    alpha: float,
    rng: Optional[np.random.Generator] = None,
    forced: Optional[int] = None,
    frame: Optional[ByproductFrame] = None,
    successor: Optional[int] = None,
) -> PairMeasurement:
    """
    在有效比特的物理对上做联合测量。

    随机抽样落到泄漏结果时抛出 LeakageDetected；强制结果只允许 0 或 1，
    此时泄漏概率记录在返回值中。
    """
    block = _require_dual_rail(lattice, effective_qubit)
    if forced is not None and forced not in (0, 1):
        raise MeasurementError(f"forced joint outcome must be 0 or 1, got {forced}")
    basis = MeasurementBasis(BasisKind.JOINT_PAIR, alpha)
    projectors = basis.projectors()
    leakage = float(outcome_probabilities(state, projectors, block)[LEAKAGE_OUTCOME])

    result = projective_measure(state, projectors, block, rng=rng, forced=forced)
    if result.outcome == LEAKAGE_OUTCOME:
        logger.warning(f"leakage on effective qubit {effective_qubit} (p={result.probability:.3e})")
        raise LeakageDetected(effective_qubit, result.probability)

    s = result.outcome
    t = s ^ 1
    return PairMeasurement(
        bits=(s,),
        probability=result.probability,
        state=result.state,
        byproduct_bit=t,
        frame=_advance(frame, effective_qubit, successor, t),
        leakage_probability=leakage,
    )


def measure_pair_singles(
    state: QuantumState,
    lattice: LatticeSpec,
    effective_qubit: int,
    alpha: float,
    rng: Optional[np.random.Generator] = None,
    forced: Optional[Tuple[int, int]] = None,
    frame: Optional[ByproductFrame] = None,
    successor: Optional[int] = None,
) -> PairMeasurement:
    """顶层比特测 B(α)，底层比特测 B(0)；逻辑变换 σ_x^{s1⊕s2⊕1} H R_z(-α)，全局相位 (-1)^{s2}"""
    top, bottom = _require_dual_rail(lattice, effective_qubit)
    forced_top, forced_bottom = _as_pair(forced)

    first = projective_measure(
        state,
        MeasurementBasis(BasisKind.SINGLE_EQUATORIAL, alpha).projectors(),
        [top],
        rng=rng,
        forced=forced_top,
    )
    second = projective_measure(
        first.state,
        MeasurementBasis(BasisKind.SINGLE_EQUATORIAL, 0.0).projectors(),
        [bottom],
        rng=rng,
        forced=forced_bottom,
    )
    s1, s2 = first.outcome, second.outcome
    t = s1 ^ s2 ^ 1
    return PairMeasurement(
        bits=(s1, s2),
        probability=first.probability * second.probability,
        state=second.state,
        byproduct_bit=t,
        frame=_advance(frame, effective_qubit, successor, t),
    )


@dataclass(frozen=True)
class ComputationalPairMeasurement:
    """U_Σ 仅在先施加 H⊗H 时有定义；否则为 None（此时是逻辑 Z 基测量）"""

    bits: Tuple[int, int]
    probability: float
    state: QuantumState
    byproduct: Optional[np.ndarray]


def pair_readout_byproduct(bits: Tuple[int, int]) -> np.ndarray:
    """{00, 11} -> σ_x，{01, 10} -> 1"""
    return SIGMA_X.copy() if bits[0] == bits[1] else np.eye(2, dtype=complex)


def measure_computational_pair(
    state: QuantumState,
    lattice: LatticeSpec,
    effective_qubit: int,
    apply_hadamards: bool = True,
    rng: Optional[np.random.Generator] = None,
    forced: Optional[Tuple[int, int]] = None,
) -> ComputationalPairMeasurement:
    top, bottom = _require_dual_rail(lattice, effective_qubit)
    forced_top, forced_bottom = _as_pair(forced)
    if apply_hadamards:
        state = apply_gate(state, np.kron(HADAMARD, HADAMARD), [top, bottom])

    z_basis = MeasurementBasis(BasisKind.COMPUTATIONAL).projectors()
    first = projective_measure(state, z_basis, [top], rng=rng, forced=forced_top)
    second = projective_measure(first.state, z_basis, [bottom], rng=rng, forced=forced_bottom)
    bits = (first.outcome, second.outcome)
    return ComputationalPairMeasurement(
        bits=bits,
        probability=first.probability * second.probability,
        state=second.state,
        byproduct=pair_readout_byproduct(bits) if apply_hadamards else None,
    )
