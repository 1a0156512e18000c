"""SU(2) Wigner function of a spin density matrix via the multipole expansion,
with a Clebsch-Gordan engine and a Gauss-Legendre sphere quadrature.

Conventions: orthonormal tensor operators (tr T'T = delta) and orthonormal
spherical harmonics, so sum |rho_KQ|^2 = tr rho^2 and the quadrature of |W|^2
over the sphere equals the purity (Parseval).
"""

from dataclasses import dataclass
from math import lgamma

import numpy as np
from scipy.special import sph_harm_y


def _is_half_integer(x):
    return abs(2 * x - round(2 * x)) < 1e-12


def _ln_factorial(x):
    # x is a non-negative (half-)integer-valued float that must be integral here
    return lgamma(round(x) + 1)


def clebsch_gordan(j1, m1, j2, m2, J, M):
    """Condon-Shortley CG coefficient <j1 m1; j2 m2 | J M> by the Racah sum.

    Factorials are taken in log space so the sum stays finite for large spins.
    Returns 0 for M != m1+m2 or a violated triangle rule; rejects invalid
    quantum numbers.
    """
    for j, m in ((j1, m1), (j2, m2), (J, M)):
        if not (_is_half_integer(j) and _is_half_integer(m)):
            raise ValueError(f"quantum numbers must be half-integers: ({j}, {m})")
        if j < 0 or abs(m) > j + 1e-12:
            raise ValueError(f"invalid quantum numbers (j={j}, m={m})")
        if not _is_half_integer(j - m):
            raise ValueError(f"j - m must be an integer: ({j}, {m})")
    if abs(M - (m1 + m2)) > 1e-12:
        return 0.0
    if J < abs(j1 - j2) - 1e-12 or J > j1 + j2 + 1e-12 or not _is_half_integer(j1 + j2 - J):
        return 0.0

    log_pref = 0.5 * (
        np.log(2 * J + 1)
        + _ln_factorial(j1 + j2 - J)
        + _ln_factorial(j1 - j2 + J)
        + _ln_factorial(-j1 + j2 + J)
        - _ln_factorial(j1 + j2 + J + 1)
        + _ln_factorial(j1 + m1)
        + _ln_factorial(j1 - m1)
        + _ln_factorial(j2 + m2)
        + _ln_factorial(j2 - m2)
        + _ln_factorial(J + M)
        + _ln_factorial(J - M)
    )
    k_min = int(round(max(0.0, j2 - J - m1, j1 + m2 - J)))
    k_max = int(round(min(j1 + j2 - J, j1 - m1, j2 + m2)))
    total = 0.0
    for k in range(k_min, k_max + 1):
        log_den = (
            _ln_factorial(k)
            + _ln_factorial(j1 + j2 - J - k)
            + _ln_factorial(j1 - m1 - k)
            + _ln_factorial(j2 + m2 - k)
            + _ln_factorial(J - j2 + m1 + k)
            + _ln_factorial(J - j1 - m2 + k)
        )
        total += (-1) ** k * np.exp(log_pref - log_den)
    return float(total)


def multipole_tensor(J, K, Q):
    """Orthonormal irreducible tensor operator T_KQ on the m-descending spin basis."""
    n = int(round(2 * J)) + 1
    T = np.zeros((n, n), dtype=complex)
    norm = np.sqrt((2 * K + 1) / (2 * J + 1))
    for i in range(n):  # row index <-> m' = J - i
        mp = J - i
        m = mp - Q
        if abs(m) > J:
            continue
        col = int(round(J - m))
        T[i, col] = norm * clebsch_gordan(J, m, K, Q, J, mp)
    return T


def multipole_components(rho, J):
    """rho_KQ = tr(rho T'_KQ) for K = 0..2J, |Q| <= K.

    Returns a dict {(K, Q): complex}.  Parseval: sum |rho_KQ|^2 = tr rho^2.
    """
    rho = np.asarray(rho)
    n = int(round(2 * J)) + 1
    if rho.shape != (n, n):
        raise ValueError(f"rho dim {rho.shape} != 2J+1 = {n}")
    comps = {}
    for K in range(int(round(2 * J)) + 1):
        for Q in range(-K, K + 1):
            T = multipole_tensor(J, K, Q)
            comps[(K, Q)] = complex(np.trace(rho @ T.conj().T))
    return comps


@dataclass(frozen=True)
class SphereGrid:
    """Gauss-Legendre nodes in cos(theta) x uniform phi, with 4pi-normalized weights."""

    thetas: np.ndarray
    phis: np.ndarray
    weights: np.ndarray  # shape (n_theta, n_phi)

    @classmethod
    def default(cls, J, n_theta=None, n_phi=None):
        """Grid exact for the bandlimited W (degree <= 2J) and for |W|^2 (<= 4J)."""
        two_j = int(round(2 * J))
        if n_theta is None:
            n_theta = 2 * two_j + 2
        if n_phi is None:
            n_phi = 2 * two_j + 2
        x, w = np.polynomial.legendre.leggauss(n_theta)
        order = np.argsort(-x)  # theta increasing from the north pole
        thetas = np.arccos(x[order])
        phis = np.linspace(0, 2 * np.pi, n_phi, endpoint=False)
        weights = np.outer(w[order], np.full(n_phi, 2 * np.pi / n_phi))
        return cls(thetas=thetas, phis=phis, weights=weights)

    def integrate(self, values):
        """Quadrature of a function sampled on the (theta, phi) grid over the sphere."""
        return float(np.sum(self.weights * values))


@dataclass(frozen=True)
class WignerField:
    """W(theta, phi) sampled on a SphereGrid; imag_residual tracks the discarded
    imaginary part (should be at roundoff for Hermitian rho)."""

    grid: SphereGrid
    values: np.ndarray
    imag_residual: float

    def purity_quadrature(self):
        """Integral of |W|^2 over the sphere = tr rho^2 by Parseval."""
        return self.grid.integrate(self.values**2)


def wigner_function(rho, J, grid=None):
    """W(theta, phi) = sum_KQ rho_KQ Y_KQ(theta, phi) with orthonormal harmonics."""
    if grid is None:
        grid = SphereGrid.default(J)
    comps = multipole_components(rho, J)
    theta = grid.thetas[:, None]
    phi = grid.phis[None, :]
    W = np.zeros((len(grid.thetas), len(grid.phis)), dtype=complex)
    for (K, Q), c in comps.items():
        if c == 0:
            continue
        W += c * sph_harm_y(K, Q, theta, phi)
    residual = float(np.abs(W.imag).max())
    return WignerField(grid=grid, values=W.real.copy(), imag_residual=residual)
