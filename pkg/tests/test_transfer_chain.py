"""信息传输链测试：标准编码 vs 双轨 DFS 编码"""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.domain.exceptions import LatticeError, MeasurementError
from app.domain.mbqc import (
    ENCODING_DFS,
    ENCODING_STANDARD,
    RANDOM,
    STRATEGY_JOINT,
    STRATEGY_SINGLES,
    ExperimentRecord,
    ideal_output,
    input_amplitudes,
    run_chain_on_amplitudes,
    run_transfer_chain,
    transfer_channel,
)
from app.domain.noise import NoiseKind, NoiseSpec
from app.domain.quantum import HADAMARD, SIGMA_X, SIGMA_Z, QuantumState, bloch_coordinates
from app.domain.quantum.random import random_density_matrix
from app.domain.tomography import chain_dephasing_kraus, chain_dephasing_output

ANGLES = [0.0, np.pi / 7, np.pi / 3, 1.1, 2.2]
GAMMAS = [0.15, 0.5, 1.0, 5.0]


def independent(gamma_t: float) -> NoiseSpec:
    return NoiseSpec(kind=NoiseKind.INDEPENDENT_DEPHASING, gamma_t=gamma_t)


def collective(gamma_t: float) -> NoiseSpec:
    return NoiseSpec(kind=NoiseKind.COLLECTIVE_DEPHASING, gamma_t=gamma_t)


class TestInputPreparation:
    def test_input_amplitudes(self):
        mu, nu = input_amplitudes(0.3, 1.2)
        assert mu == pytest.approx(np.cos(0.3))
        assert nu == pytest.approx(np.exp(1.2j) * np.sin(0.3))

    def test_non_finite_angles(self):
        with pytest.raises(MeasurementError):
            input_amplitudes(np.nan, 0.0)

    def test_ideal_output_for_two_steps_is_identity(self):
        mu, nu = input_amplitudes(0.7, 2.0)
        assert_allclose(ideal_output(mu, nu, [0.0, 0.0]).data, [mu, nu], atol=1e-12)

    def test_ideal_output_single_step(self):
        mu, nu = input_amplitudes(0.7, 2.0)
        assert_allclose(ideal_output(mu, nu, [0.0]).data, HADAMARD @ [mu, nu], atol=1e-12)


class TestStandardChain:
    """未编码三比特链在独立退相位下的输出"""

    @pytest.mark.parametrize("gamma_t", GAMMAS)
    @pytest.mark.parametrize("theta", ANGLES)
    @pytest.mark.parametrize("phi", ANGLES)
    def test_output_matches_closed_form(self, theta, phi, gamma_t):
        record = run_transfer_chain(theta, phi, noise=independent(gamma_t), encoding=ENCODING_STANDARD)
        expected = chain_dephasing_output(theta, phi, gamma_t)
        assert_allclose(record.logical_output.density_matrix(), expected, atol=1e-9)

    def test_forced_zero_leaves_no_byproduct(self):
        record = run_transfer_chain(0.4, 0.9, encoding=ENCODING_STANDARD)
        assert record.byproduct.bits(2) == (0, 0)
        assert record.strategy == "single"
        assert record.branch_probability == pytest.approx(0.25)
        assert record.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-12)

    def test_strong_dephasing_collapses_to_maximally_mixed(self):
        record = run_transfer_chain(0.6, 1.1, noise=independent(50.0), encoding=ENCODING_STANDARD)
        assert np.linalg.norm(bloch_coordinates(record.logical_output)) < 1e-8

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_random_outcomes_with_angles(self, seed):
        record = run_transfer_chain(
            0.8, -0.4, encoding=ENCODING_STANDARD, n_effective=4,
            angles=[0.3, -1.2, 2.0], outcomes=RANDOM, rng=np.random.default_rng(seed),
        )
        assert record.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-10)


class TestDualRailChain:
    """双轨 DFS 编码链"""

    @pytest.mark.parametrize("gamma_t", GAMMAS + [50.0])
    @pytest.mark.parametrize("theta", ANGLES)
    @pytest.mark.parametrize("phi", ANGLES)
    def test_collective_dephasing_is_harmless(self, theta, phi, gamma_t):
        record = run_transfer_chain(theta, phi, noise=collective(gamma_t))
        assert record.fidelity_vs_ideal >= 1.0 - 1e-10

    def test_output_independent_of_noise_strength(self):
        outputs = [
            run_transfer_chain(0.6, 1.1, noise=collective(g)).logical_output.density_matrix()
            for g in GAMMAS + [50.0]
        ]
        for out in outputs[1:]:
            assert_allclose(out, outputs[0], atol=1e-12)

    def test_forced_zero_byproduct_is_xz(self):
        """两次联合测量都得到 s = 0，即 t = 1，最后一个比特上留下 X Z"""
        record = run_transfer_chain(0.6, 1.1)
        assert record.byproduct.bits(2) == (1, 1)
        assert_allclose(record.byproduct.operator(2), SIGMA_X @ SIGMA_Z)
        assert [o.bits for o in record.outcomes] == [(0,), (0,)]

    def test_raw_output_carries_byproduct(self):
        record = run_transfer_chain(0.6, 1.1)
        mu, nu = input_amplitudes(0.6, 1.1)
        expected = QuantumState(SIGMA_X @ SIGMA_Z @ np.array([mu, nu]))
        assert_allclose(record.raw_output.density_matrix(), expected.density_matrix(), atol=1e-12)

    def test_independent_dephasing_is_not_protected(self):
        record = run_transfer_chain(0.6, 1.1, noise=independent(1.0))
        assert record.fidelity_vs_ideal < 0.999
        assert record.leakage_probability == pytest.approx(0.0, abs=1e-12)

    def test_collective_unitary_noise_reports_leakage(self):
        noise = NoiseSpec(kind=NoiseKind.COLLECTIVE_UNITARY, beta=(0.4, 0.3, 0.0))
        record = run_transfer_chain(0.6, 1.1, noise=noise)
        assert record.leakage_probability > 1e-3
        assert record.noise == noise.to_dict()

    @pytest.mark.parametrize("strategy", [STRATEGY_JOINT, STRATEGY_SINGLES])
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_random_outcomes_with_angles(self, strategy, seed):
        record = run_transfer_chain(
            1.0, 0.5, noise=collective(2.0), n_effective=4, strategy=strategy,
            angles=[0.7, -0.2, 1.9], outcomes=RANDOM, rng=np.random.default_rng(seed),
        )
        assert record.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-10)

    def test_singles_forced_zero(self):
        record = run_transfer_chain(0.2, 2.5, noise=collective(5.0), strategy=STRATEGY_SINGLES)
        assert [o.bits for o in record.outcomes] == [(0, 0), (0, 0)]
        assert record.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-10)

    def test_explicit_outcome_plan(self):
        record = run_transfer_chain(0.6, 1.1, outcomes=[1, 0])
        assert [o.bits for o in record.outcomes] == [(1,), (0,)]
        assert record.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_chain_lengths(self, n):
        record = run_transfer_chain(0.9, 0.3, noise=collective(1.0), n_effective=n)
        assert record.chain == n
        assert len(record.outcomes) == n - 1
        assert record.fidelity_vs_ideal == pytest.approx(1.0, abs=1e-10)


class TestChainValidation:
    @pytest.mark.parametrize("n", [1, 6])
    def test_chain_length_bounds(self, n):
        with pytest.raises(LatticeError):
            run_transfer_chain(0.1, 0.2, n_effective=n)

    def test_unknown_encoding(self):
        with pytest.raises(LatticeError):
            run_transfer_chain(0.1, 0.2, encoding="dfs3")

    def test_unknown_strategy(self):
        with pytest.raises(MeasurementError):
            run_transfer_chain(0.1, 0.2, strategy="fused")

    def test_random_needs_rng(self):
        with pytest.raises(MeasurementError):
            run_transfer_chain(0.1, 0.2, outcomes=RANDOM)

    def test_plan_length(self):
        with pytest.raises(MeasurementError):
            run_transfer_chain(0.1, 0.2, outcomes=[0])

    def test_angle_count(self):
        with pytest.raises(MeasurementError):
            run_transfer_chain(0.1, 0.2, angles=[0.0])

    def test_record_rejects_bad_fidelity(self):
        record = run_transfer_chain(0.1, 0.2)
        with pytest.raises(MeasurementError):
            ExperimentRecord(
                encoding=record.encoding,
                strategy=record.strategy,
                chain=record.chain,
                outcomes=record.outcomes,
                byproduct=record.byproduct,
                raw_output=record.raw_output,
                logical_output=record.logical_output,
                target=record.target,
                fidelity_vs_ideal=1.5,
                branch_probability=record.branch_probability,
            )


class TestTransferChannel:
    """把传输链当作单比特信道"""

    def test_dfs_channel_is_identity_on_mixed_inputs(self):
        channel = transfer_channel(ENCODING_DFS, collective(5.0))
        rho = random_density_matrix(1, np.random.default_rng(21))
        assert_allclose(channel(rho).data, rho.data, atol=1e-10)

    def test_standard_channel_matches_kraus_form(self):
        gamma_t = 0.5
        channel = transfer_channel(ENCODING_STANDARD, independent(gamma_t))
        rho = random_density_matrix(1, np.random.default_rng(22))
        expected = chain_dephasing_kraus(gamma_t).apply(rho.data)
        assert_allclose(channel(rho).data, expected, atol=1e-9)

    def test_uncorrected_channel_keeps_byproduct(self):
        channel = transfer_channel(ENCODING_DFS, corrected=False)
        out = channel(QuantumState(np.array([1.0, 0.0])))
        assert_allclose(out.data, np.diag([0, 1]), atol=1e-12)

    def test_rejects_multi_qubit_input(self):
        channel = transfer_channel(ENCODING_DFS)
        with pytest.raises(MeasurementError):
            channel(QuantumState.basis("00"))

    def test_record_serializes_matrices(self):
        record = run_chain_on_amplitudes(1.0, 0.0, encoding=ENCODING_DFS)
        data = record.to_dict()
        assert data["encoding"] == "dfs"
        assert data["strategy"] == "joint"
        assert data["byproduct"] == {"x": {"2": 1}, "z": {"2": 1}}
        assert_allclose(data["logical_output"], np.diag([1, 0]), atol=1e-12)
