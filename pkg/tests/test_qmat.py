import numpy as np
import pytest

from core.errors import (
    HermiticityError,
    MixtureError,
    NormalizationError,
    PositivityError,
    TraceError,
    UnitarityError,
)
from core.qmat import (
    D,
    H,
    IDENTITY2,
    IDENTITY4,
    L,
    PAULI_X,
    R,
    V,
    Arm,
    DensityMatrix,
    JonesMatrix,
    PolarizationKet,
    apply_local,
    dephase_diagonal,
    eigenvalues_hermitian,
    expectation,
    kron_local,
    mix,
    partial_transpose,
    projector,
    tensor,
)
from core.qmat.random import (
    random_density_matrix,
    random_polarization_ket,
    random_product_state,
    random_qubit_state,
    random_unitary,
)
from core.states import bell_phi, werner
from core.witness import witness_operator

X = JonesMatrix(u=PAULI_X)
IDENTITY = JonesMatrix(u=IDENTITY2)


def assert_valid_state(rho: DensityMatrix):
    assert np.max(np.abs(rho.m - rho.m.conj().T)) <= 1e-9
    assert abs(np.trace(rho.m) - 1) <= 1e-9
    assert np.linalg.eigvalsh(rho.m)[0] >= -1e-9


class TestTypes:
    def test_ket_must_be_normalized(self):
        with pytest.raises(NormalizationError):
            PolarizationKet(amp=[1, 1])

    def test_ket_rejects_non_finite(self):
        with pytest.raises(ValueError):
            PolarizationKet(amp=[np.nan, 1])

    def test_arrays_are_read_only(self):
        with pytest.raises(ValueError):
            H.amp[0] = 0

    def test_jones_must_be_unitary(self):
        with pytest.raises(UnitarityError):
            JonesMatrix(u=[[1, 0], [0, 0.5]])

    def test_density_matrix_checks(self):
        with pytest.raises(HermiticityError):
            DensityMatrix(m=[[0.25, 0.3, 0, 0], [0.1, 0.25, 0, 0], [0, 0, 0.25, 0], [0, 0, 0, 0.25]])
        with pytest.raises(TraceError) as excinfo:
            DensityMatrix(m=np.eye(4) * 0.225)
        assert excinfo.value.measured == pytest.approx(0.9)
        with pytest.raises(PositivityError):
            DensityMatrix(m=np.diag([0.6, 0.6, -0.1, -0.1]))


class TestTensor:
    def test_computational_product(self):
        assert np.allclose(tensor(H, V).amp, [0, 1, 0, 0], atol=1e-15)

    def test_diagonal_product(self):
        assert np.allclose(tensor(D, D).amp, [0.5, 0.5, 0.5, 0.5], atol=1e-15)

    def test_circular_product(self):
        assert np.allclose(tensor(L, R).amp, 0.5 * np.array([1, -1j, 1j, 1]), atol=1e-15)


class TestProjector:
    def test_hh(self, computational_projectors):
        expected = np.zeros((4, 4))
        expected[0, 0] = 1
        assert np.allclose(computational_projectors[0].m, expected, atol=1e-15)

    def test_singlet(self, singlet_projector):
        m = singlet_projector.m
        assert m[1, 1] == pytest.approx(0.5)
        assert m[2, 2] == pytest.approx(0.5)
        assert m[1, 2] == pytest.approx(-0.5)
        assert m[2, 1] == pytest.approx(-0.5)
        assert abs(m[0, 0]) + abs(m[3, 3]) + abs(m[0, 3]) < 1e-15

    def test_lr_is_rank_one(self):
        v = 0.5 * np.array([1, -1j, 1j, 1])
        rho = projector(tensor(L, R))
        assert np.allclose(rho.m, np.outer(v, v.conj()), atol=1e-15)
        assert np.sum(rho.eigenvalues() > 1e-12) == 1


class TestMix:
    def test_single_term(self, singlet_projector):
        assert mix([(1, singlet_projector)]).allclose(singlet_projector)

    def test_computational_projectors_sum_to_identity(self, computational_projectors):
        rho = mix([(0.25, p) for p in computational_projectors])
        assert np.allclose(rho.m, IDENTITY4 / 4, atol=1e-15)

    def test_half_half(self, computational_projectors):
        rho = mix([(0.5, computational_projectors[0]), (0.5, computational_projectors[3])])
        assert np.allclose(rho.m, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)

    def test_rejects_negative_weight(self, computational_projectors):
        with pytest.raises(MixtureError):
            mix([(1.5, computational_projectors[0]), (-0.5, computational_projectors[1])])

    def test_rejects_bad_sum(self, computational_projectors):
        with pytest.raises(MixtureError):
            mix([(0.5, computational_projectors[0]), (0.4, computational_projectors[1])])

    def test_rejects_all_zero_and_empty(self, computational_projectors):
        with pytest.raises(MixtureError):
            mix([(0.0, computational_projectors[0])])
        with pytest.raises(MixtureError):
            mix([])


class TestApplyLocal:
    def test_bit_flip_on_b(self, computational_projectors):
        p_hh, p_hv = computational_projectors[0], computational_projectors[1]
        assert apply_local(p_hh, Arm.B, X).allclose(p_hv)

    def test_identity(self):
        rho = werner(0.42)
        assert apply_local(rho, Arm.A, IDENTITY).allclose(rho)

    def test_bell_phi_pi_to_singlet(self, singlet_projector):
        rho = apply_local(projector(bell_phi(np.pi)), Arm.B, X)
        assert rho.allclose(singlet_projector)

    def test_spectrum_preserved(self, rng):
        for _ in range(2000):
            rho = random_density_matrix(rng)
            arm = Arm.A if rng.random() < 0.5 else Arm.B
            rotated = apply_local(rho, arm, JonesMatrix(u=random_unitary(rng, 2)))
            assert np.allclose(rotated.eigenvalues(), rho.eigenvalues(), atol=1e-10)


class TestDephase:
    def test_singlet(self, singlet_projector, computational_projectors):
        expected = mix([(0.5, computational_projectors[1]), (0.5, computational_projectors[2])])
        assert dephase_diagonal(singlet_projector).allclose(expected)

    def test_diagonal_fixed_point(self):
        rho = DensityMatrix(m=np.diag([0.4, 0.3, 0.2, 0.1]))
        assert np.array_equal(dephase_diagonal(rho).m, rho.m)

    def test_werner(self):
        p = 0.37
        expected = np.diag([(1 - p) / 4, (1 + p) / 4, (1 + p) / 4, (1 - p) / 4])
        assert np.allclose(dephase_diagonal(werner(p)).m, expected, atol=1e-15)

    def test_idempotent_and_trace_preserving(self, rng):
        for _ in range(1000):
            rho = random_density_matrix(rng)
            once = dephase_diagonal(rho)
            assert np.array_equal(dephase_diagonal(once).m, once.m)
            assert np.trace(once.m).real == pytest.approx(np.trace(rho.m).real, abs=1e-15)
            assert once.eigenvalues()[0] >= -1e-12


class TestPartialTranspose:
    def test_product_state_stays_positive(self, rng):
        rho_a, rho_b = random_qubit_state(rng), random_qubit_state(rng)
        pt = partial_transpose(kron_local(rho_a, rho_b), Arm.B)
        assert np.allclose(pt, np.kron(rho_a, rho_b.T), atol=1e-15)
        assert eigenvalues_hermitian(pt)[0] >= -1e-12

    def test_singlet_min_eigenvalue(self):
        assert eigenvalues_hermitian(partial_transpose(werner(1), Arm.B))[0] == pytest.approx(
            -0.5, abs=1e-12
        )

    @pytest.mark.parametrize("p", [0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0])
    def test_werner_spectrum(self, p):
        spectrum = eigenvalues_hermitian(partial_transpose(werner(p), Arm.B))
        expected = np.sort([(1 + p) / 4] * 3 + [(1 - 3 * p) / 4])
        assert np.allclose(spectrum, expected, atol=1e-12)

    def test_involution(self, rng):
        for _ in range(100):
            rho = random_density_matrix(rng)
            for arm in Arm:
                twice = partial_transpose(partial_transpose(rho, arm), arm)
                assert np.array_equal(twice, rho.m)

    def test_hermitian_unit_trace(self, rng):
        rho = random_density_matrix(rng)
        for arm in Arm:
            pt = partial_transpose(rho, arm)
            assert np.allclose(pt, pt.conj().T, atol=1e-15)
            assert np.trace(pt).real == pytest.approx(1.0, abs=1e-12)

    def test_random_products_have_positive_transpose(self, rng):
        for _ in range(10_000):
            pt = partial_transpose(random_product_state(rng), Arm.B)
            assert np.linalg.eigvalsh(pt)[0] >= -1e-10


class TestEigenvalues:
    def test_chaotic(self):
        assert np.allclose(eigenvalues_hermitian(IDENTITY4 / 4), [0.25] * 4, atol=1e-15)

    def test_ascending(self):
        values = eigenvalues_hermitian(np.diag([0.4, 0.3, 0.2, 0.1]))
        assert np.allclose(values, [0.1, 0.2, 0.3, 0.4], atol=1e-15)

    def test_witness(self):
        values = eigenvalues_hermitian(witness_operator().m)
        assert np.allclose(values, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_rejects_non_hermitian(self):
        m = np.zeros((4, 4))
        m[0, 1] = 1
        with pytest.raises(HermiticityError):
            eigenvalues_hermitian(m)

    def test_recovers_random_spectrum(self, rng):
        for _ in range(1000):
            spectrum = np.sort(rng.normal(size=4))
            u = random_unitary(rng)
            m = (u * spectrum) @ u.conj().T
            m = (m + m.conj().T) / 2
            values = eigenvalues_hermitian(m)
            assert np.allclose(values, spectrum, atol=1e-10)
            assert values.sum() == pytest.approx(np.trace(m).real, abs=1e-10)


class TestExpectation:
    def test_identity(self, rng):
        assert expectation(IDENTITY4, random_density_matrix(rng)) == pytest.approx(1.0, abs=1e-12)

    def test_witness_on_werner(self):
        for p in (0.0, 0.25, 0.6, 1.0):
            assert expectation(witness_operator().m, werner(p)) == pytest.approx(
                (1 - 3 * p) / 4, abs=1e-12
            )

    def test_hh_on_werner(self, computational_projectors):
        p = 0.3
        assert expectation(computational_projectors[0].m, werner(p)) == pytest.approx(
            (1 - p) / 4, abs=1e-12
        )

    def test_rejects_non_hermitian(self):
        m = np.zeros((4, 4))
        m[0, 1] = 1
        with pytest.raises(HermiticityError):
            expectation(m, werner(0.5))


def test_random_outputs_are_valid_states(rng):
    for _ in range(10_000):
        rho = random_density_matrix(rng)
        rotated = apply_local(rho, Arm.B, JonesMatrix(u=random_unitary(rng, 2)))
        mixed = mix([(0.3, rho), (0.7, rotated)])
        assert_valid_state(mixed)


def test_random_product_kets_give_valid_states(rng):
    for _ in range(10_000):
        a, b = random_polarization_ket(rng), random_polarization_ket(rng)
        ket = tensor(a, b)
        for i in range(2):
            for j in range(2):
                assert ket.amp[2 * i + j] == pytest.approx(a.amp[i] * b.amp[j], abs=1e-15)
        assert_valid_state(projector(ket))
