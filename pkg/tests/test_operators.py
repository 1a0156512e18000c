import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from echodyn.operators import (JCParams, ProductSpace, boson_ops, build_jc,
                               embed, spin_ops)


def comm(A, B):
    return A @ B - B @ A


class TestBosonOps:
    def test_defining_matrix_elements(self):
        a, adag = boson_ops(3)
        expected = np.zeros((3, 3))
        expected[0, 1] = 1.0
        expected[1, 2] = np.sqrt(2)
        assert np.allclose(a, expected)
        assert np.array_equal(adag, a.conj().T)

    def test_number_operator(self):
        a, adag = boson_ops(3)
        assert np.allclose(adag @ a, np.diag([0.0, 1.0, 2.0]))

    def test_truncated_commutator(self):
        # oracle: direct matrix multiplication; truncation only breaks the
        # last diagonal entry
        a, adag = boson_ops(4)
        assert np.allclose(comm(a, adag), np.diag([1.0, 1.0, 1.0, -3.0]))

    def test_truncation_artifact_confined(self):
        a, adag = boson_ops(7)
        dev = comm(a, adag) - np.eye(7)
        dev[6, 6] = 0.0
        assert np.abs(dev).max() < 1e-14  # sqrt roundoff only

    def test_rejects_small_truncation(self):
        with pytest.raises(ValueError):
            boson_ops(1)


class TestSpinOps:
    def test_pauli_case(self):
        Jz, Jp, Jm = spin_ops(0.5)
        assert np.allclose(Jz, np.diag([0.5, -0.5]))
        assert np.allclose(Jp, [[0, 1], [0, 0]])

    def test_ladder_formula_j4(self):
        _, Jp, _ = spin_ops(4)
        # |4,3> is basis index 1, |4,4> index 0
        e3 = np.zeros(9)
        e3[1] = 1.0
        out = Jp @ e3
        assert out[0] == pytest.approx(np.sqrt(8), abs=1e-13)
        assert np.abs(out[1:]).max() == 0.0

    @given(two_j=st.integers(min_value=1, max_value=15))
    @settings(max_examples=15, deadline=None)
    def test_su2_algebra(self, two_j):
        J = two_j / 2
        Jz, Jp, Jm = spin_ops(J)
        assert np.abs(comm(Jp, Jm) - 2 * Jz).max() < 1e-13
        assert np.abs(comm(Jz, Jp) - Jp).max() < 1e-13

    @given(two_j=st.integers(min_value=1, max_value=15))
    @settings(max_examples=15, deadline=None)
    def test_casimir(self, two_j):
        J = two_j / 2
        Jz, Jp, Jm = spin_ops(J)
        casimir = Jp @ Jm + Jz @ Jz - Jz
        assert np.abs(casimir - J * (J + 1) * np.eye(len(Jz))).max() < 1e-12

    def test_rejects_non_half_integer(self):
        with pytest.raises(ValueError):
            spin_ops(1.3)


class TestEmbed:
    def test_kron_with_identity(self):
        Jz, _, _ = spin_ops(0.5)
        out = embed(Jz, 1, ProductSpace(2, 2))
        assert np.allclose(out, np.diag([0.5, 0.5, -0.5, -0.5]))

    def test_identity_embeds_to_identity(self):
        out = embed(np.eye(3), 2, ProductSpace(2, 3))
        assert np.allclose(out, np.eye(6))

    def test_acts_only_on_its_factor(self):
        a, _ = boson_ops(3)
        A = embed(a, 2, ProductSpace(2, 3))
        psi = np.zeros(6)
        psi[0 * 3 + 1] = 1.0  # |i=0, nu=1>
        out = A @ psi
        expected = np.zeros(6)
        expected[0 * 3 + 0] = 1.0
        assert np.allclose(out, expected)

    def test_preserves_spectrum_with_multiplicity(self):
        rng = np.random.default_rng(3)
        X = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        op = X + X.conj().T
        for which, other_dim in ((1, 4), (2, 4)):
            space = ProductSpace(3, 4) if which == 1 else ProductSpace(4, 3)
            big = embed(op, which, space)
            evals = np.sort(np.linalg.eigvalsh(big))
            expected = np.sort(np.repeat(np.linalg.eigvalsh(op), other_dim))
            assert np.allclose(evals, expected, atol=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            embed(np.eye(3), 1, ProductSpace(2, 3))


class TestBuildJC:
    def params(self, G=1.0, Gp=1.0, nb=12):
        return JCParams(J=4, omega=0.3, epsilon=0.3, G=G, Gprime=Gp, nboson=nb)

    def test_hermitian(self):
        H, V = build_jc(self.params())
        scale = np.abs(H).max()
        assert np.abs(H - H.conj().T).max() < 1e-13 * scale
        assert np.abs(V - V.conj().T).max() == 0.0

    def test_corotating_conserves_total_quanta(self):
        # oracle: direct commutator with n + Jz; a J+ moves one boson quantum
        # into one spin quantum, conserving the sum
        p = self.params(G=1.0, Gp=0.0)
        H, _ = build_jc(p)
        n_plus_jz = embed(np.diag(np.arange(p.nboson)).astype(complex), 2, p.space) \
            + embed(spin_ops(p.J)[0], 1, p.space)
        assert np.abs(H @ n_plus_jz - n_plus_jz @ H).max() < 1e-12

    def test_counterrotating_conserves_quanta_difference(self):
        p = self.params(G=0.0, Gp=1.0)
        H, _ = build_jc(p)
        n_minus_jz = embed(np.diag(np.arange(p.nboson)).astype(complex), 2, p.space) \
            - embed(spin_ops(p.J)[0], 1, p.space)
        assert np.abs(H @ n_minus_jz - n_minus_jz @ H).max() < 1e-12

    def test_hbar_convention(self):
        p = self.params()
        assert p.hbar * p.J == pytest.approx(1.0)

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            JCParams(J=1.2, omega=0.3, epsilon=0.3, G=1, Gprime=1, nboson=8)
        with pytest.raises(ValueError):
            JCParams(J=4, omega=0.3, epsilon=0.3, G=1, Gprime=1, nboson=1)
