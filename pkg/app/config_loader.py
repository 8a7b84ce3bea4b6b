import json
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from loguru import logger

from .domain.cluster.models import LatticeSpec
from .domain.exceptions import ConfigError, SimulationError
from .domain.noise.models import NoiseSpec

COMMAND_TRANSFER = "transfer"
COMMAND_TOMOGRAPHY = "tomography"
COMMAND_BLOCH_SWEEP = "bloch-sweep"
COMMAND_DFS3_CHECK = "dfs3-check"
COMMAND_STABILIZER_CHECK = "stabilizer-check"
COMMAND_CHECKS = "checks"

COMMANDS = (
    COMMAND_TRANSFER,
    COMMAND_TOMOGRAPHY,
    COMMAND_BLOCH_SWEEP,
    COMMAND_DFS3_CHECK,
    COMMAND_STABILIZER_CHECK,
    COMMAND_CHECKS,
)

TOMOGRAPHY_CHANNELS = ("standard-chain", "dfs-chain", "kraus-file", "identity", "full-dephasing")
CHECK_SUITES = ("stabilizer", "dfs3", "pair-outcomes")


def _project_root() -> Path:
    # app/config_loader.py -> project_root
    return Path(__file__).resolve().parents[1]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


@dataclass
class TransferConfig:
    """单次传输链实验"""

    encoding: str = "dfs"
    chain: int = 3
    strategy: str = "joint"
    theta: float = 0.6
    phi: float = 1.1
    noise: Dict[str, Any] = field(
        default_factory=lambda: {"kind": "collective_dephasing", "gamma_t": 1.0}
    )
    outcomes: str = "forced-zero"
    seed: int = 0

    def __post_init__(self):
        _require(self.encoding in ("standard", "dfs"), f"unknown encoding {self.encoding!r}")
        _require(2 <= int(self.chain) <= 5, f"chain length must lie in [2, 5], got {self.chain}")
        _require(self.strategy in ("joint", "singles"), f"unknown strategy {self.strategy!r}")
        _require(self.outcomes in ("forced-zero", "random"), f"unknown outcomes {self.outcomes!r}")
        self.noise_spec()

    def noise_spec(self) -> NoiseSpec:
        try:
            return NoiseSpec.from_dict(self.noise)
        except SimulationError as exc:
            raise ConfigError(f"invalid noise section: {exc}") from exc


@dataclass
class SweepConfig:
    """
    Bloch 球扫描。

    - gamma_t: Γt 列表
    - theta_points / phi_points: 球面网格，θ ∈ [0, π/2]，φ ∈ [0, 2π)
    - workers: 并行线程数（环境变量 DFS_MBQC_WORKERS 可覆盖）
    """

    gamma_t: List[float] = field(default_factory=lambda: [0.15, 0.5, 1.0, 5.0])
    theta_points: int = 7
    phi_points: int = 12
    chain: int = 3
    encodings: List[str] = field(default_factory=lambda: ["standard", "dfs"])
    workers: int = 4
    seed: int = 0

    def __post_init__(self):
        _require(len(self.gamma_t) > 0, "gamma_t list must be non-empty")
        _require(all(float(g) >= 0 for g in self.gamma_t), "gamma_t values must be >= 0")
        _require(self.theta_points >= 1 and self.phi_points >= 1, "angle grids must be non-empty")
        _require(2 <= int(self.chain) <= 5, f"chain length must lie in [2, 5], got {self.chain}")
        _require(len(self.encodings) > 0, "encodings list must be non-empty")
        for encoding in self.encodings:
            _require(encoding in ("standard", "dfs"), f"unknown encoding {encoding!r}")
        _require(self.workers >= 1, "workers must be >= 1")


@dataclass
class TomographyConfig:
    """
    过程层析。channel 取值：
    standard-chain / dfs-chain（Γt 下的三比特链）、kraus-file（用户 Kraus 文件）、
    identity、full-dephasing
    """

    channel: str = "standard-chain"
    gamma_t: float = 0.5
    chain: int = 3
    kraus_file: Optional[str] = None
    monte_carlo_samples: int = 0
    seed: int = 0

    def __post_init__(self):
        _require(self.channel in TOMOGRAPHY_CHANNELS, f"unknown channel {self.channel!r}")
        _require(float(self.gamma_t) >= 0, "gamma_t must be >= 0")
        _require(2 <= int(self.chain) <= 5, f"chain length must lie in [2, 5], got {self.chain}")
        _require(
            self.channel != "kraus-file" or bool(self.kraus_file),
            "channel 'kraus-file' needs a kraus_file path",
        )
        _require(self.monte_carlo_samples >= 0, "monte_carlo_samples must be >= 0")


@dataclass
class ChecksConfig:
    """
    检查套件。

    - stabilizer_sizes: 线链上的有效比特数；另外总会检查 2×2 网格
    - inject_kappa_flip: 故意翻转一个 κ，用于确认套件能失败
    - dfs3_betas / dfs3_states: 集体噪声采样数与每个样本的逻辑态数
    """

    suites: List[str] = field(default_factory=lambda: list(CHECK_SUITES))
    stabilizer_sizes: List[int] = field(default_factory=lambda: [2, 3, 4])
    inject_kappa_flip: bool = False
    dfs3_betas: int = 100
    dfs3_states: int = 10
    dfs3_negative_control: bool = True
    pair_outcome_inputs: int = 5
    tolerance: float = 1e-10
    dfs3_tolerance: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        _require(len(self.suites) > 0, "suites list must be non-empty")
        for suite in self.suites:
            _require(suite in CHECK_SUITES, f"unknown check suite {suite!r}")
        for size in self.stabilizer_sizes:
            _require(1 <= int(size) <= 5, f"stabilizer sizes must lie in [1, 5], got {size}")
        _require(self.dfs3_betas >= 1 and self.dfs3_states >= 1, "dfs3 sample counts must be >= 1")
        _require(self.pair_outcome_inputs >= 1, "pair_outcome_inputs must be >= 1")


SECTION_TYPES = {
    COMMAND_TRANSFER: TransferConfig,
    COMMAND_TOMOGRAPHY: TomographyConfig,
    COMMAND_BLOCH_SWEEP: SweepConfig,
    COMMAND_DFS3_CHECK: ChecksConfig,
    COMMAND_STABILIZER_CHECK: ChecksConfig,
    COMMAND_CHECKS: ChecksConfig,
}

DEFAULT_FILES = {
    COMMAND_TRANSFER: "transfer.json",
    COMMAND_TOMOGRAPHY: "tomography.json",
    COMMAND_BLOCH_SWEEP: "bloch_sweep.json",
    COMMAND_DFS3_CHECK: "checks.json",
    COMMAND_STABILIZER_CHECK: "checks.json",
    COMMAND_CHECKS: "checks.json",
}

# 单套件命令只运行对应的检查
SUITE_OVERRIDES = {
    COMMAND_DFS3_CHECK: {"suites": ["dfs3"]},
    COMMAND_STABILIZER_CHECK: {"suites": ["stabilizer"]},
}

Section = Union[TransferConfig, SweepConfig, TomographyConfig, ChecksConfig]


@dataclass
class RunConfig:
    command: str
    section: Section
    out: Path
    seed: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "out": str(self.out),
            "seed": self.seed,
            "config": asdict(self.section),
        }


def _deep_merge(base: Dict[str, object], override: Dict[str, object]) -> Dict[str, object]:
    merged = dict(base)
    for key, value in override.items():
        if key in merged and isinstance(merged[key], dict) and isinstance(value, dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _default_config_path(command: str) -> Path:
    return _project_root() / "config" / DEFAULT_FILES[command]


def load_default_section(command: str) -> Dict[str, Any]:
    """读取 config/<command>.json；缺失或损坏时回退到数据类默认值"""
    path = _default_config_path(command)
    if not path.exists():
        logger.warning(f"[配置] Default config not found at {path}, using built-in defaults.")
        return {}
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        logger.error(f"[配置] Failed to load default config {path}: {exc}, using built-in defaults.")
        return {}
    if not isinstance(data, dict):
        logger.warning(f"[配置] Default config {path} is not a JSON object, using built-in defaults.")
        return {}
    return data


def load_user_document(path: Union[str, Path]) -> Dict[str, Any]:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must be a JSON object")
    return data


def build_section(command: str, data: Dict[str, Any]) -> Section:
    section_type = SECTION_TYPES[command]
    known = {f.name for f in fields(section_type)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown keys for {command}: {', '.join(unknown)}")
    try:
        return section_type(**data)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"invalid {command} config: {exc}") from exc


def _env_workers() -> Optional[int]:
    raw = os.getenv("DFS_MBQC_WORKERS")
    if not raw:
        return None
    try:
        workers = int(raw)
    except ValueError:
        logger.warning(f"[配置] Invalid DFS_MBQC_WORKERS={raw!r}, ignored.")
        return None
    return workers if workers >= 1 else None


def load_run_config(
    command: str,
    config_path: Optional[Union[str, Path]] = None,
    out: Optional[Union[str, Path]] = None,
    seed: Optional[int] = None,
) -> RunConfig:
    """
    默认配置 <- 用户配置（深度合并）<- 命令覆盖 <- --seed / 环境变量
    """
    if command not in SECTION_TYPES:
        raise ConfigError(f"unknown command {command!r}")
    data = load_default_section(command)
    if config_path is not None:
        data = _deep_merge(data, load_user_document(config_path))
    data = _deep_merge(data, SUITE_OVERRIDES.get(command, {}))
    if seed is not None:
        data["seed"] = int(seed)
    if command == COMMAND_BLOCH_SWEEP:
        workers = _env_workers()
        if workers is not None:
            data["workers"] = workers

    section = build_section(command, data)
    out_path = Path(out) if out else _project_root() / "output" / f"{command}.json"
    logger.info(f"[配置] {command}: seed={section.seed}, out={out_path}")
    return RunConfig(command=command, section=section, out=out_path, seed=section.seed)


def load_lattice_spec(path: Union[str, Path]) -> LatticeSpec:
    """{"effective": n, "encoding": "dual-rail", "edges": [[0, 1], ...]}"""
    data = load_user_document(path)
    try:
        return LatticeSpec.from_dict(data)
    except SimulationError as exc:
        raise ConfigError(f"invalid lattice document {path}: {exc}") from exc


def load_noise_spec(path: Union[str, Path]) -> NoiseSpec:
    """{"kind": "...", "gamma_t": x, "beta": [x, y, z]?}"""
    data = load_user_document(path)
    try:
        return NoiseSpec.from_dict(data)
    except SimulationError as exc:
        raise ConfigError(f"invalid noise document {path}: {exc}") from exc
