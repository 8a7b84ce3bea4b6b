"""领域异常定义

所有模拟相关的错误都继承自 SimulationError（同时是 ValueError），
命令行入口据此区分「输入/校验失败」(退出码 1) 和「检查套件失败」(退出码 2)。
"""


class SimulationError(ValueError):
    """模拟过程中的通用错误"""


class DimensionMismatchError(SimulationError):
    """算符 / 态的维度不匹配"""


class InvalidStateError(SimulationError):
    """量子态不满足归一化、厄米性或正定性"""


class RegisterTooLargeError(SimulationError):
    """寄存器超过稠密模拟的比特上限"""


class MeasurementError(SimulationError):
    """投影测量的投影算符集合不合法"""


class VanishingOutcomeError(MeasurementError):
    """强制指定的测量结果概率过小"""

    def __init__(self, outcome: int, probability: float):
        super().__init__(f"forced outcome {outcome} has probability {probability:.3e}")
        self.outcome = outcome
        self.probability = probability


class LeakageDetected(MeasurementError):
    """联合测量落在双轨子空间之外"""

    def __init__(self, effective_qubit: int, probability: float):
        super().__init__(
            f"leakage outside the dual-rail subspace on effective qubit {effective_qubit} "
            f"(outcome probability {probability:.3e})"
        )
        self.effective_qubit = effective_qubit
        self.probability = probability


class LatticeError(SimulationError):
    """格点描述不合法"""


class NoiseSpecError(SimulationError):
    """噪声参数不合法，或与编码方式不匹配"""


class ChannelError(SimulationError):
    """信道不保迹、χ 矩阵非厄米等"""


class NotCompletelyPositiveError(ChannelError):
    """χ 矩阵存在明显为负的本征值"""

    def __init__(self, eigenvalue: float):
        super().__init__(f"channel matrix has negative eigenvalue {eigenvalue:.3e}")
        self.eigenvalue = eigenvalue


class ConfigError(SimulationError):
    """运行配置不合法"""
