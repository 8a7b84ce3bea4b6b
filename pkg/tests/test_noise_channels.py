"""退相干信道与探测界测试"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from app.domain.cluster import DFS3, LatticeSpec, STANDARD, build_encoded_cluster
from app.domain.exceptions import NoiseSpecError
from app.domain.noise import (
    COLLECTIVE,
    INDEPENDENT,
    CollectiveGenerators,
    NoiseKind,
    NoiseSpec,
    apply_collective_dephasing,
    apply_collective_unitary,
    apply_independent_dephasing,
    apply_noise,
    choi_matrix,
    collective_unitary,
    dephase_register,
    dephasing_kraus,
    jz_eigenvalues,
    no_click_probability_bounds,
    photon_number,
)
from app.domain.quantum import (
    KET_PLUS,
    QuantumState,
    apply_gate,
    apply_kraus,
    is_unitary,
    projector,
    rz,
)
from app.domain.quantum.random import random_density_matrix

gammas = st.floats(min_value=0.0, max_value=60.0, allow_nan=False)
betas = st.tuples(*[st.floats(min_value=-np.pi, max_value=np.pi, allow_nan=False)] * 3)

SINGLET = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


class TestNoiseSpec:
    """噪声参数"""

    def test_from_dict(self):
        spec = NoiseSpec.from_dict({"kind": "collective_unitary", "beta": [0.1, 0.2, 0.3]})
        assert spec.kind is NoiseKind.COLLECTIVE_UNITARY
        assert spec.beta == (0.1, 0.2, 0.3)
        assert spec.to_dict() == {
            "kind": "collective_unitary",
            "gamma_t": 0.0,
            "beta": [0.1, 0.2, 0.3],
        }

    def test_unknown_kind(self):
        with pytest.raises(NoiseSpecError):
            NoiseSpec.from_dict({"kind": "amplitude_damping", "gamma_t": 1.0})

    def test_missing_kind(self):
        with pytest.raises(NoiseSpecError):
            NoiseSpec.from_dict({"gamma_t": 1.0})

    def test_negative_strength(self):
        with pytest.raises(NoiseSpecError):
            NoiseSpec(kind=NoiseKind.INDEPENDENT_DEPHASING, gamma_t=-0.1)

    def test_collective_unitary_needs_beta(self):
        with pytest.raises(NoiseSpecError):
            NoiseSpec(kind=NoiseKind.COLLECTIVE_UNITARY)

    @pytest.mark.parametrize(
        "data",
        [
            {"kind": "independent_dephasing", "gamma_t": "strong"},
            {"kind": "independent_dephasing", "gamma_t": [1.0]},
            {"kind": "collective_unitary", "beta": ["a", 0, 0]},
            {"kind": "collective_unitary", "beta": 5},
            {"kind": "independent_dephasing", "targets": ["x"]},
            {"kind": "independent_dephasing", "targets": 3},
        ],
    )
    def test_malformed_values_raise_noise_spec_error(self, data):
        with pytest.raises(NoiseSpecError):
            NoiseSpec.from_dict(data)

    def test_numeric_strings_are_accepted(self):
        assert NoiseSpec.from_dict({"kind": "independent_dephasing", "gamma_t": "0.5"}).gamma_t == 0.5

    def test_noiseless(self):
        spec = NoiseSpec.noiseless()
        assert spec.gamma_t == 0.0
        assert spec.kind is NoiseKind.INDEPENDENT_DEPHASING


class TestIndependentDephasing:
    """独立相位阻尼"""

    @settings(max_examples=25, deadline=None)
    @given(gamma_t=gammas)
    def test_kraus_completeness(self, gamma_t):
        total = sum(k.conj().T @ k for k in dephasing_kraus(gamma_t))
        assert_allclose(total, np.eye(2), atol=1e-12)

    @pytest.mark.parametrize("gamma_t", [0.0, 0.15, 1.0, 5.0])
    def test_coherence_shrinks(self, gamma_t):
        out = apply_independent_dephasing(QuantumState(KET_PLUS).to_density(), 0, gamma_t)
        assert out.data[0, 1].real == pytest.approx(0.5 * np.exp(-gamma_t / 2), abs=1e-12)
        assert out.data[0, 0].real == pytest.approx(0.5, abs=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(gamma_t=gammas, theta=st.floats(min_value=-np.pi, max_value=np.pi, allow_nan=False))
    def test_commutes_with_z_rotations(self, gamma_t, theta):
        rho = random_density_matrix(2, np.random.default_rng(13))
        rotated_first = apply_independent_dephasing(apply_gate(rho, rz(theta), [1]), 1, gamma_t)
        dephased_first = apply_gate(apply_independent_dephasing(rho, 1, gamma_t), rz(theta), [1])
        assert_allclose(rotated_first.data, dephased_first.data, atol=1e-12)

    def test_negative_strength(self):
        with pytest.raises(NoiseSpecError):
            dephasing_kraus(-1.0)

    def test_register_mode_touches_every_physical_qubit(self):
        lattice = LatticeSpec.chain(2, STANDARD)
        rho = QuantumState(np.kron(KET_PLUS, KET_PLUS))
        out = dephase_register(rho, lattice, 1.0, INDEPENDENT)
        # |00><11| 的系数被两个比特各压缩一次
        assert out.data[0, 3].real == pytest.approx(0.25 * np.exp(-1.0), abs=1e-12)


class TestCollectiveDephasing:
    """成对集体退相位"""

    def test_jz_eigenvalues(self):
        assert_allclose(jz_eigenvalues(2, [0, 1]), [1, 0, 0, -1])
        assert_allclose(jz_eigenvalues(3, [2]), [0.5, -0.5] * 4)

    @settings(max_examples=25, deadline=None)
    @given(gamma_t=gammas)
    def test_dual_rail_subspace_is_invariant(self, gamma_t):
        state = QuantumState(np.array([0, 0.6, 0.8j, 0], dtype=complex))
        out = apply_collective_dephasing(state, [0, 1], gamma_t)
        assert_allclose(out.data, state.density_matrix(), atol=1e-12)

    def test_coherence_outside_code_decays(self):
        state = QuantumState(np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2))
        out = apply_collective_dephasing(state, [0, 1], 0.5)
        assert out.data[0, 3].real == pytest.approx(0.5 * np.exp(-2 * 0.5), abs=1e-12)

    def test_block_must_be_pair(self):
        with pytest.raises(NoiseSpecError):
            apply_collective_dephasing(QuantumState.basis("000"), [0, 1, 2], 1.0)

    def test_encoded_cluster_is_untouched(self):
        lattice = LatticeSpec.chain(3)
        state, _ = build_encoded_cluster(lattice)
        out = dephase_register(state, lattice, 50.0, COLLECTIVE)
        assert_allclose(out.data, state.density_matrix(), atol=1e-12)

    def test_collective_mode_needs_dual_rail(self):
        lattice = LatticeSpec.chain(2, STANDARD)
        with pytest.raises(NoiseSpecError):
            dephase_register(QuantumState.basis("00"), lattice, 1.0, COLLECTIVE)

    def test_unknown_mode(self):
        lattice = LatticeSpec.chain(2, STANDARD)
        with pytest.raises(NoiseSpecError):
            dephase_register(QuantumState.basis("00"), lattice, 1.0, "burst")


class TestCollectiveUnitary:
    """完全集体噪声"""

    def test_generators_satisfy_su2(self):
        for size in (2, 3):
            j = CollectiveGenerators.for_block(size)
            assert_allclose(j.jx @ j.jy - j.jy @ j.jx, 1j * j.jz, atol=1e-12)

    def test_block_size(self):
        with pytest.raises(NoiseSpecError):
            CollectiveGenerators.for_block(4)

    @settings(max_examples=20, deadline=None)
    @given(beta=betas)
    def test_unitary(self, beta):
        assert is_unitary(collective_unitary(3, beta), atol=1e-10)

    @settings(max_examples=20, deadline=None)
    @given(beta=betas)
    def test_singlet_is_invariant(self, beta):
        out = apply_collective_unitary(QuantumState(SINGLET), [0, 1], beta)
        assert_allclose(out.data, SINGLET, atol=1e-10)

    def test_dual_rail_codeword_leaks(self):
        """J_x 分量会把 |01> 推出双轨子空间"""
        out = apply_collective_unitary(QuantumState.basis("01"), [0, 1], (1.0, 0.0, 0.0))
        leaked = abs(out.data[0]) ** 2 + abs(out.data[3]) ** 2
        assert leaked > 1e-3

    def test_non_finite_beta(self):
        with pytest.raises(NoiseSpecError):
            collective_unitary(2, (np.nan, 0.0, 0.0))


class TestApplyNoise:
    """按 NoiseSpec 施加噪声"""

    def test_targets_restrict_independent_dephasing(self):
        lattice = LatticeSpec.chain(2, STANDARD)
        rho = QuantumState(np.kron(KET_PLUS, KET_PLUS))
        spec = NoiseSpec(kind=NoiseKind.INDEPENDENT_DEPHASING, gamma_t=100.0, targets=(1,))
        out = apply_noise(rho, lattice, spec)
        reduced_first = out.data.reshape(2, 2, 2, 2).trace(axis1=1, axis2=3)
        assert_allclose(reduced_first, projector(KET_PLUS), atol=1e-12)

    def test_collective_dephasing_needs_pairs(self):
        lattice = LatticeSpec.chain(2, STANDARD)
        spec = NoiseSpec(kind=NoiseKind.COLLECTIVE_DEPHASING, gamma_t=1.0)
        with pytest.raises(NoiseSpecError):
            apply_noise(QuantumState.basis("00"), lattice, spec)

    def test_collective_unitary_on_dfs3_blocks(self):
        lattice = LatticeSpec.chain(1, DFS3)
        spec = NoiseSpec(kind=NoiseKind.COLLECTIVE_UNITARY, beta=(0.3, -0.2, 0.9))
        out = apply_noise(QuantumState.basis("000"), lattice, spec)
        assert_allclose(out.data, collective_unitary(3, spec.beta)[:, 0], atol=1e-12)

    def test_collective_unitary_needs_blocks(self):
        lattice = LatticeSpec.chain(2, STANDARD)
        spec = NoiseSpec(kind=NoiseKind.COLLECTIVE_UNITARY, beta=(0.3, 0.0, 0.0))
        with pytest.raises(NoiseSpecError):
            apply_noise(QuantumState.basis("00"), lattice, spec)


class TestChoiMatrix:
    def test_identity_channel(self):
        choi = choi_matrix(lambda rho: rho, 1)
        bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
        assert_allclose(choi, np.outer(bell, bell), atol=1e-12)

    def test_full_dephasing_channel(self):
        ops = [np.sqrt(0.5) * np.eye(2), np.sqrt(0.5) * np.diag([1, -1])]
        choi = choi_matrix(lambda rho: apply_kraus(rho, ops, [0]), 1)
        assert_allclose(choi, np.diag([0.5, 0, 0, 0.5]), atol=1e-12)
        assert np.trace(choi).real == pytest.approx(1.0)

    @settings(max_examples=40, deadline=None)
    @given(gamma_t=gammas)
    def test_independent_dephasing_is_completely_positive(self, gamma_t):
        choi = choi_matrix(lambda rho: apply_independent_dephasing(rho, 0, gamma_t), 1)
        assert np.trace(choi).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(choi).min() >= -1e-10

    @settings(max_examples=25, deadline=None)
    @given(gamma_t=gammas)
    def test_collective_dephasing_is_completely_positive(self, gamma_t):
        choi = choi_matrix(lambda rho: apply_collective_dephasing(rho, [0, 1], gamma_t), 2)
        assert np.trace(choi).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(choi).min() >= -1e-10

    @settings(max_examples=25, deadline=None)
    @given(beta=betas)
    def test_collective_unitary_is_completely_positive(self, beta):
        choi = choi_matrix(lambda rho: apply_collective_unitary(rho, [0, 1], beta), 2)
        assert np.trace(choi).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(choi).min() >= -1e-10


class TestDetectionBounds:
    """荧光探测置信度"""

    def test_photon_number(self):
        assert photon_number(2.62e-6, 2.62e-8) == pytest.approx(100.0)

    def test_bounds_vanish_for_realistic_parameters(self):
        lower, upper = no_click_probability_bounds(0.89, photon_number(2.62e-6, 2.62e-8))
        assert 0.0 <= lower <= upper < 1e-30

    def test_zero_efficiency(self):
        assert no_click_probability_bounds(0.0, 100.0) == pytest.approx((1.0, 1.0))

    @settings(max_examples=30, deadline=None)
    @given(
        eta=st.floats(min_value=0.0, max_value=1.0),
        n=st.floats(min_value=0.0, max_value=200.0),
    )
    def test_lower_never_exceeds_upper(self, eta, n):
        lower, upper = no_click_probability_bounds(eta, n)
        assert lower <= upper + 1e-15

    @pytest.mark.parametrize("eta, n", [(-0.1, 1.0), (1.5, 1.0), (0.5, -1.0), (np.nan, 1.0)])
    def test_invalid_arguments(self, eta, n):
        with pytest.raises(NoiseSpecError):
            no_click_probability_bounds(eta, n)

    def test_invalid_lifetime(self):
        with pytest.raises(NoiseSpecError):
            photon_number(1.0, 0.0)
