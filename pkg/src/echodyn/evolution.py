"""Exact evolution via Hermitian eigendecomposition, echo dynamics, and the
integrated interaction-picture perturbation Sigma(t)."""

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
# Eigenvalue gaps below DEGENERACY_REL * max|E| take the t-branch of the
# phase integral; avoids catastrophic cancellation, exact for true degeneracies.
DEGENERACY_REL = 1e-12


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues and unitary eigenvector matrix of a Hermitian operator."""

    energies: np.ndarray
    basis: np.ndarray

    @property
    def dim(self):
        return len(self.energies)


@dataclass(frozen=True)
class EchoConfig:
    """Full echo-experiment parameterization: model, perturbation strength, grid, start state."""

    params: "object"
    delta: float
    times: np.ndarray
    initial: np.ndarray

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")
        times = np.asarray(self.times, dtype=float)
        if times[0] != 0.0 or np.any(np.diff(times) <= 0):
            raise ValueError("times must be a monotone grid starting at 0")


def diagonalize(H):
    """Hermitian eigendecomposition; rejects non-Hermitian input."""
    H = np.asarray(H)
    scale = np.abs(H).max()
    if scale > 0 and np.abs(H - H.conj().T).max() > HERMITIAN_TOL * scale:
        raise ValueError("operator is not Hermitian")
    energies, basis = np.linalg.eigh(H)
    return SpectralDecomposition(energies=energies, basis=basis)


def propagate(spec, psi0, t, hbar):
    """Apply U(t) = exp(-iHt/hbar) = W exp(-i diag(E) t/hbar) W'."""
    coeffs = spec.basis.conj().T @ psi0
    coeffs = coeffs * np.exp(-1j * spec.energies * t / hbar)
    return spec.basis @ coeffs


def echo_apply(specH, specHd, psi0, t, hbar):
    """Echo-evolved state M_delta(t)|psi0> = U_delta(-t) U(t)|psi0>, exactly.

    specHd must be the decomposition of H + delta*V.
    """
    return propagate(specHd, propagate(specH, psi0, t, hbar), -t, hbar)


def phase_integral(delta_e, t, hbar):
    """Integral of e^{i dE tau / hbar} over tau in [0, t], elementwise.

    Equals hbar (e^{i dE t/hbar} - 1)/(i dE) away from degeneracy, t on it.
    """
    delta_e = np.asarray(delta_e, dtype=float)
    scale = np.abs(delta_e).max() if delta_e.size else 0.0
    thresh = DEGENERACY_REL * scale
    safe = np.where(np.abs(delta_e) > thresh, delta_e, 1.0)
    phi = hbar * (np.exp(1j * safe * t / hbar) - 1.0) / (1j * safe)
    return np.where(np.abs(delta_e) > thresh, phi, complex(t))


def sigma_operator(specH, V, t, hbar):
    """Sigma(t) = integral_0^t U'(tau) V U(tau) dtau, evaluated in the eigenbasis of H."""
    W = specH.basis
    Vp = W.conj().T @ V @ W
    dE = specH.energies[:, None] - specH.energies[None, :]
    Sp = Vp * phase_integral(dE, t, hbar)
    return W @ Sp @ W.conj().T


class SigmaPropagator:
    """Fast repeated application of Sigma(t) to a fixed state across a time grid.

    Precomputes V in the H eigenbasis and the resolvent-weighted matrix so each
    time point costs a few matrix-vector products instead of a fresh N^2 phase
    matrix exponentiation.
    """

    def __init__(self, specH, V, hbar):
        self.spec = specH
        self.hbar = hbar
        W = specH.basis
        self.Vp = W.conj().T @ V @ W
        dE = specH.energies[:, None] - specH.energies[None, :]
        scale = np.abs(dE).max()
        self.degenerate = np.abs(dE) <= DEGENERACY_REL * scale
        safe = np.where(self.degenerate, 1.0, dE)
        # hbar * Vp / (i dE), zeroed on (near-)degenerate pairs
        self.T1 = np.where(self.degenerate, 0.0, hbar * self.Vp / (1j * safe))
        self.Vdeg = np.where(self.degenerate, self.Vp, 0.0)

    def to_eigenbasis(self, psi):
        return self.spec.basis.conj().T @ psi

    def from_eigenbasis(self, psi_p):
        return self.spec.basis @ psi_p

    def apply_eig(self, psi_p, t):
        """Sigma(t) applied to a vector given in the H eigenbasis (result in eigenbasis)."""
        u = np.exp(1j * self.spec.energies * t / self.hbar)
        return u * (self.T1 @ (u.conj() * psi_p)) - self.T1 @ psi_p + t * (self.Vdeg @ psi_p)

    def apply(self, psi, t):
        """Sigma(t)|psi> in the original basis."""
        return self.from_eigenbasis(self.apply_eig(self.to_eigenbasis(psi), t))
