"""检查套件：稳定子本征方程、三比特 DFS 不变性、成对测量结果枚举"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from loguru import logger

from ..config_loader import ChecksConfig
from ..domain.cluster import (
    DUAL_RAIL,
    STANDARD,
    EigenvalueSet,
    LatticeSpec,
    build_encoded_cluster,
    build_standard_cluster,
    verify_stabilizers,
)
from ..domain.dfs3 import (
    collective_commutator,
    single_qubit_control,
    verify_collective_invariance,
    verify_unitary_invariance,
)
from ..domain.mbqc import enumerate_pair_outcomes
from ..domain.quantum import SIGMA_X

PAIR_READOUT_BYPRODUCTS = {(0, 0): SIGMA_X, (0, 1): np.eye(2), (1, 0): np.eye(2), (1, 1): SIGMA_X}
NEGATIVE_CONTROL_FLOOR = 1e-3


@dataclass
class SuiteResult:
    name: str
    passed: bool
    residual: float
    details: List[Dict[str, Any]] = field(default_factory=list)
    expected_fail: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": self.residual,
            "details": self.details,
            "expected_fail": self.expected_fail,
        }


@dataclass
class CheckReport:
    suites: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "suites": [s.to_dict() for s in self.suites]}


class CheckService:
    """按配置依次运行检查套件"""

    def __init__(self, config: ChecksConfig, seed: Optional[int] = None):
        self.config = config
        self.seed = config.seed if seed is None else seed

    def stabilizer_suite(self) -> SuiteResult:
        details = []
        lattices = [LatticeSpec.chain(n, DUAL_RAIL) for n in self.config.stabilizer_sizes]
        lattices.append(LatticeSpec.grid(2, 2, DUAL_RAIL))
        for lattice in lattices:
            state, kappa = build_encoded_cluster(lattice)
            if self.config.inject_kappa_flip:
                kappa = kappa.flipped(lattice.effective_qubits[0])
            residual = verify_stabilizers(state, lattice, kappa)
            details.append(
                {"encoding": DUAL_RAIL, "lattice": lattice.to_dict(), "residual": residual}
            )
        for n in self.config.stabilizer_sizes:
            lattice = LatticeSpec.chain(n, STANDARD)
            state = build_standard_cluster(n)
            residual = verify_stabilizers(state, lattice, EigenvalueSet.zeros(lattice))
            details.append(
                {"encoding": STANDARD, "lattice": lattice.to_dict(), "residual": residual}
            )
        worst = max(d["residual"] for d in details)
        return SuiteResult("stabilizer", worst < self.config.tolerance, worst, details)

    def dfs3_suite(self) -> SuiteResult:
        rng = np.random.default_rng(self.seed)
        betas = rng.uniform(-np.pi, np.pi, size=(self.config.dfs3_betas, 3))
        infidelity = verify_collective_invariance(betas, rng, self.config.dfs3_states)
        commutator = max(collective_commutator(beta) for beta in betas)
        details = [
            {"check": "collective_infidelity", "value": infidelity},
            {"check": "code_space_commutator", "value": commutator},
        ]
        passed = infidelity < self.config.dfs3_tolerance and commutator < self.config.tolerance
        expected_fail = []
        if self.config.dfs3_negative_control:
            control = verify_unitary_invariance(
                [single_qubit_control(SIGMA_X)], rng, self.config.dfs3_states
            )
            detected = control > NEGATIVE_CONTROL_FLOOR
            expected_fail.append(
                {"check": "local_sigma_x", "infidelity": control, "detected": detected}
            )
            passed = passed and detected
        return SuiteResult("dfs3", passed, max(infidelity, commutator), details, expected_fail)

    def pair_outcome_suite(self) -> SuiteResult:
        rng = np.random.default_rng(self.seed)
        details = []
        worst = 0.0
        for _ in range(self.config.pair_outcome_inputs):
            amplitudes = rng.normal(size=2) + 1j * rng.normal(size=2)
            mu, nu = amplitudes / np.linalg.norm(amplitudes)
            rows = enumerate_pair_outcomes(mu, nu)
            total = sum(row.probability for row in rows)
            worst = max(worst, abs(total - 1.0))
            for row in rows:
                worst = max(
                    worst,
                    1.0 - row.fidelity,
                    float(np.abs(row.byproduct - PAIR_READOUT_BYPRODUCTS[row.outcome]).max()),
                )
            details.append(
                {"mu": complex(mu), "nu": complex(nu), "rows": [r.to_dict() for r in rows]}
            )
        return SuiteResult("pair-outcomes", worst < self.config.tolerance, worst, details)

    def run(self) -> CheckReport:
        suites: Dict[str, Callable[[], SuiteResult]] = {
            "stabilizer": self.stabilizer_suite,
            "dfs3": self.dfs3_suite,
            "pair-outcomes": self.pair_outcome_suite,
        }
        results = []
        for name in self.config.suites:
            result = suites[name]()
            status = "通过" if result.passed else "失败"
            log = logger.info if result.passed else logger.error
            log(f"[检查] {name}: {status}, residual={result.residual:.3e}")
            results.append(result)
        return CheckReport(results)
