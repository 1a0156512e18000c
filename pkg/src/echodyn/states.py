"""Initial-state constructors: oscillator and SU(2) coherent states, products, random states."""

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

COHERENT_TAIL_TOL = 1e-10

# Seeded random states use numpy's default PCG64 generator; the algorithm
# name is recorded in run metadata for reproducibility.
RNG_ALGORITHM = "numpy.random.Generator(PCG64)"


def normalize(psi):
    psi = np.asarray(psi, dtype=complex)
    return psi / np.linalg.norm(psi)


def oscillator_coherent(alpha, nboson):
    """Truncated harmonic-oscillator coherent state |alpha>, renormalized.

    Rejects the construction if the exact Poisson tail weight beyond the
    truncation exceeds COHERENT_TAIL_TOL (the truncation is too small).
    """
    alpha = complex(alpha)
    nbar = abs(alpha) ** 2
    tail = float(poisson.sf(nboson - 1, nbar)) if nbar > 0 else 0.0
    if tail >= COHERENT_TAIL_TOL:
        raise ValueError(
            f"coherent-state tail weight {tail:.3e} >= {COHERENT_TAIL_TOL:.0e}; "
            f"increase nboson (got {nboson} for |alpha|^2 = {nbar:.4g})"
        )
    n = np.arange(nboson)
    if alpha == 0:
        psi = np.zeros(nboson, dtype=complex)
        psi[0] = 1.0
        return psi
    # c_n = alpha^n / sqrt(n!), magnitudes in log space
    log_mag = n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1)
    phase = np.exp(1j * n * np.angle(alpha))
    psi = np.exp(log_mag - log_mag.max()) * phase
    return normalize(psi)


def su2_coherent(theta, phi, J):
    """SU(2) coherent state (1+|tau|^2)^-J exp(tau J-)|J,J>, tau = e^{i phi} tan(theta/2).

    Amplitudes on the m-descending basis (index i <-> m = J - i).
    theta = pi is taken as the limit |J,-J>.
    """
    if not (0 <= theta <= np.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    n = int(round(2 * J)) + 1
    psi = np.zeros(n, dtype=complex)
    if abs(theta - np.pi) < 1e-14:
        psi[-1] = 1.0
        return psi
    k = np.arange(n)  # k = J - m
    tan_half = np.tan(theta / 2)
    log_binom = gammaln(2 * J + 1) - gammaln(k + 1) - gammaln(2 * J - k + 1)
    log_mag = 0.5 * log_binom + k * np.log(tan_half) if tan_half > 0 else np.where(k == 0, 0.0, -np.inf)
    phase = np.exp(1j * k * phi)
    psi = np.exp(log_mag - log_mag.max()) * phase
    return normalize(psi)


def product_state(s1, s2):
    """Composite state with amplitudes[i*n2 + nu] = s1[i] * s2[nu]."""
    return np.kron(np.asarray(s1), np.asarray(s2))


def random_state(dim, seed):
    """Haar-random pure state: normalized complex standard-normal vector, per seed."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return normalize(v)
