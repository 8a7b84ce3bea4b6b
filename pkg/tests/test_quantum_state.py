"""量子态核心操作测试"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from app.domain.exceptions import (
    DimensionMismatchError,
    InvalidStateError,
    MeasurementError,
    RegisterTooLargeError,
    VanishingOutcomeError,
)
from app.domain.quantum import (
    CZ,
    HADAMARD,
    KET_0,
    KET_1,
    KET_PLUS,
    SIGMA_X,
    SIGMA_Z,
    QuantumState,
    apply_gate,
    apply_kraus,
    bloch_coordinates,
    embed_operator,
    fidelity,
    is_unitary,
    kron_all,
    partial_trace,
    projective_measure,
    projector,
    rz,
    tensor,
)
from app.domain.quantum.random import haar_state, random_density_matrix, random_unitary

angles = st.floats(min_value=-2 * np.pi, max_value=2 * np.pi, allow_nan=False)


class TestQuantumState:
    """QuantumState 构造与校验"""

    def test_basis_state_ordering(self):
        """qubit 0 是最高位"""
        state = QuantumState.basis("01")
        assert_allclose(state.data, [0, 1, 0, 0])
        assert state.num_qubits == 2
        assert state.is_pure

    def test_rejects_unnormalized_vector(self):
        with pytest.raises(InvalidStateError):
            QuantumState(np.array([1.0, 1.0]))

    def test_rejects_non_power_of_two(self):
        with pytest.raises(DimensionMismatchError):
            QuantumState(np.array([1.0, 0.0, 0.0]))

    def test_rejects_non_hermitian_density(self):
        with pytest.raises(InvalidStateError):
            QuantumState(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_register_cap(self):
        vec = np.zeros(2**13)
        vec[0] = 1.0
        with pytest.raises(RegisterTooLargeError):
            QuantumState(vec)

    def test_data_is_read_only(self):
        state = QuantumState.basis("0")
        with pytest.raises(ValueError):
            state.data[0] = 0.0

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidStateError):
            QuantumState(np.array([[1.2, 0.0], [0.0, -0.2]]))

    def test_accepts_rounding_level_negativity(self):
        rho = QuantumState(np.array([[1.0 + 1e-12, 0.0], [0.0, -1e-12]]))
        assert rho.num_qubits == 1


class TestTensorAndGates:
    """张量积与门作用"""

    def test_tensor_states(self):
        out = tensor(QuantumState(KET_0), QuantumState(KET_1))
        assert_allclose(out.data, QuantumState.basis("01").data)

    def test_tensor_mixed_kinds_raise_type_error(self):
        with pytest.raises(TypeError):
            tensor(QuantumState(KET_0), np.eye(2))

    def test_apply_gate_on_second_qubit(self):
        out = apply_gate(QuantumState.basis("00"), SIGMA_X, [1])
        assert_allclose(out.data, QuantumState.basis("01").data)

    def test_apply_gate_respects_target_order(self):
        """CNOT 的控制位在 targets[0]"""
        cnot = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        out = apply_gate(QuantumState.basis("010"), cnot, [1, 2])
        assert_allclose(out.data, QuantumState.basis("011").data)
        out = apply_gate(QuantumState.basis("010"), cnot, [2, 1])
        assert_allclose(out.data, QuantumState.basis("010").data)

    def test_gate_on_density_matches_vector(self):
        rng = np.random.default_rng(3)
        psi = haar_state(3, rng)
        u = random_unitary(4, rng)
        pure = apply_gate(psi, u, [2, 0])
        mixed = apply_gate(psi.to_density(), u, [2, 0])
        assert_allclose(mixed.data, pure.density_matrix(), atol=1e-12)

    def test_embed_operator_matches_apply_gate(self):
        rng = np.random.default_rng(5)
        psi = haar_state(3, rng)
        u = random_unitary(4, rng)
        full = embed_operator(u, [2, 0], 3)
        assert_allclose(full @ psi.data, apply_gate(psi, u, [2, 0]).data, atol=1e-12)

    def test_wrong_gate_shape(self):
        with pytest.raises(DimensionMismatchError):
            apply_gate(QuantumState.basis("00"), CZ, [0])

    def test_duplicate_targets(self):
        with pytest.raises(DimensionMismatchError):
            apply_gate(QuantumState.basis("00"), CZ, [1, 1])

    def test_operators_are_unitary(self):
        for op in (HADAMARD, CZ, rz(0.3), SIGMA_X):
            assert is_unitary(op)
        assert not is_unitary(np.array([[1, 1], [0, 1]]))


class TestKrausAndPartialTrace:
    """Kraus 作用与偏迹"""

    def test_kraus_preserves_trace(self):
        rng = np.random.default_rng(11)
        rho = random_density_matrix(2, rng)
        p = 0.3
        ops = [np.sqrt(1 - p) * np.eye(2), np.sqrt(p) * SIGMA_Z]
        out = apply_kraus(rho, ops, [1])
        assert abs(np.trace(out.data) - 1.0) < 1e-12

    def test_partial_trace_product_state(self):
        state = tensor(QuantumState(KET_PLUS), QuantumState(KET_1))
        assert_allclose(partial_trace(state, [0]).data, projector(KET_PLUS), atol=1e-12)
        assert_allclose(partial_trace(state, [1]).data, projector(KET_1), atol=1e-12)

    def test_partial_trace_keep_order(self):
        state = QuantumState.basis("011")
        reduced = partial_trace(state, [2, 0])
        assert_allclose(reduced.data, projector(QuantumState.basis("10").data), atol=1e-12)

    def test_partial_trace_is_trace_preserving_and_positive(self):
        rng = np.random.default_rng(31)
        for i in range(1000):
            state = random_density_matrix(3, rng) if i % 2 else haar_state(3, rng)
            keep = sorted(rng.choice(3, size=1 + i % 2, replace=False).tolist())
            reduced = partial_trace(state, keep).data
            assert np.trace(reduced).real == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.eigvalsh(reduced).min() >= -1e-10

    def test_partial_trace_bell_is_maximally_mixed(self):
        bell = QuantumState(np.array([1, 0, 0, 1]) / np.sqrt(2))
        assert_allclose(partial_trace(bell, [1]).data, np.eye(2) / 2, atol=1e-12)
        assert_allclose(partial_trace(bell.to_density(), [0]).data, np.eye(2) / 2, atol=1e-12)


class TestProjectiveMeasure:
    """投影测量"""

    def test_forced_outcome(self):
        plus = QuantumState(KET_PLUS)
        result = projective_measure(plus, [projector(KET_0), projector(KET_1)], [0], forced=1)
        assert result.outcome == 1
        assert result.probability == pytest.approx(0.5)
        assert_allclose(result.state.data, KET_1, atol=1e-12)

    def test_vanishing_forced_outcome(self):
        with pytest.raises(VanishingOutcomeError):
            projective_measure(
                QuantumState(KET_0), [projector(KET_0), projector(KET_1)], [0], forced=1
            )

    def test_incomplete_projectors(self):
        with pytest.raises(MeasurementError):
            projective_measure(QuantumState(KET_0), [projector(KET_0)], [0], forced=0)

    def test_needs_rng_or_forced(self):
        with pytest.raises(MeasurementError):
            projective_measure(QuantumState(KET_0), [projector(KET_0), projector(KET_1)], [0])

    def test_sampling_is_seeded(self):
        plus = QuantumState(kron_all([KET_PLUS, KET_PLUS]))
        projectors = [projector(KET_0), projector(KET_1)]
        first = [
            projective_measure(plus, projectors, [0], rng=np.random.default_rng(7)).outcome
            for _ in range(3)
        ]
        second = [
            projective_measure(plus, projectors, [0], rng=np.random.default_rng(7)).outcome
            for _ in range(3)
        ]
        assert first == second


class TestFidelity:
    """保真度与 Bloch 坐标"""

    def test_orthogonal_states(self):
        assert fidelity(QuantumState(KET_0), QuantumState(KET_1)) == pytest.approx(0.0)

    def test_pure_vs_mixed(self):
        mixed = QuantumState(np.eye(2) / 2)
        assert fidelity(QuantumState(KET_0), mixed) == pytest.approx(0.5)

    def test_mixed_vs_mixed_matches_pure(self):
        rng = np.random.default_rng(2)
        a, b = haar_state(1, rng), haar_state(1, rng)
        assert fidelity(a.to_density(), b.to_density()) == pytest.approx(fidelity(a, b), abs=1e-10)

    def test_pure_pairs_stored_as_density_matrices(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            a, b = haar_state(2, rng), haar_state(2, rng)
            expected = abs(np.vdot(a.data, b.data)) ** 2
            assert fidelity(a.to_density(), b.to_density()) == pytest.approx(expected, abs=1e-10)

    def test_rank_deficient_mixed_states(self):
        """两个秩 2 的 4×4 密度矩阵：结果与按定义计算的一致且对称"""
        rng = np.random.default_rng(18)
        for _ in range(50):
            kets = [haar_state(2, rng).data for _ in range(4)]
            a = QuantumState(0.7 * np.outer(kets[0], kets[0].conj()) + 0.3 * np.outer(kets[1], kets[1].conj()))
            b = QuantumState(0.4 * np.outer(kets[2], kets[2].conj()) + 0.6 * np.outer(kets[3], kets[3].conj()))
            forward, backward = fidelity(a, b), fidelity(b, a)
            assert forward == pytest.approx(backward, abs=1e-10)
            assert 0.0 <= forward <= 1.0

    def test_mixed_state_with_itself(self):
        rho = random_density_matrix(2, np.random.default_rng(19))
        assert fidelity(rho, rho) == pytest.approx(1.0, abs=1e-10)

    def test_bloch_of_plus(self):
        assert bloch_coordinates(QuantumState(KET_PLUS)) == pytest.approx((1.0, 0.0, 0.0))

    @settings(max_examples=30, deadline=None)
    @given(theta=angles, phi=angles)
    def test_bloch_vector_is_unit_for_pure_states(self, theta, phi):
        psi = QuantumState(np.array([np.cos(theta), np.exp(1j * phi) * np.sin(theta)]))
        assert np.linalg.norm(bloch_coordinates(psi)) == pytest.approx(1.0, abs=1e-12)
