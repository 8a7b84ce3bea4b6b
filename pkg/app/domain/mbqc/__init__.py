"""测量驱动的单向量子计算：测量、副产物帧与传输协议"""
from .measurements import (
    ComputationalPairMeasurement,
    PairMeasurement,
    measure_computational_pair,
    measure_joint,
    measure_pair_singles,
    simulated_map,
    pair_readout_byproduct,
)
from .models import (
    LEAKAGE_OUTCOME,
    BasisKind,
    ByproductFrame,
    ExperimentRecord,
    MeasurementBasis,
    MeasurementOutcome,
    joint_ket,
)
from .protocols import (
    ENCODING_DFS,
    ENCODING_STANDARD,
    FORCED_ZERO,
    RANDOM,
    STRATEGY_JOINT,
    STRATEGY_SINGLES,
    ChannelFn,
    PairOutcomeRow,
    apply_effective_cz,
    enumerate_pair_outcomes,
    ideal_output,
    input_amplitudes,
    run_chain_on_amplitudes,
    run_transfer_chain,
    transfer_channel,
)

__all__ = [
    "ComputationalPairMeasurement",
    "PairMeasurement",
    "measure_computational_pair",
    "measure_joint",
    "measure_pair_singles",
    "simulated_map",
    "pair_readout_byproduct",
    "LEAKAGE_OUTCOME",
    "BasisKind",
    "ByproductFrame",
    "ExperimentRecord",
    "MeasurementBasis",
    "MeasurementOutcome",
    "joint_ket",
    "ENCODING_DFS",
    "ENCODING_STANDARD",
    "FORCED_ZERO",
    "RANDOM",
    "STRATEGY_JOINT",
    "STRATEGY_SINGLES",
    "ChannelFn",
    "PairOutcomeRow",
    "apply_effective_cz",
    "enumerate_pair_outcomes",
    "ideal_output",
    "input_amplitudes",
    "run_chain_on_amplitudes",
    "run_transfer_chain",
    "transfer_channel",
]
