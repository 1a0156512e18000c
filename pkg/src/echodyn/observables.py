"""Echo observables: fidelity, reduced density matrices, purity, the correlation
integrals C(t), D(t), linear-response predictions and asymptotic decay fits."""

from dataclasses import dataclass

import numpy as np

from .evolution import SigmaPropagator
from .states import product_state


def fidelity(psi0, psi_echo):
    """Squared overlap |<psi0|psi_echo>|^2."""
    return float(abs(np.vdot(psi0, psi_echo)) ** 2)


def partial_trace(psi, space, keep):
    """Reduced density matrix of a pure composite state.

    keep=1 traces out the boson factor, keep=2 the spin factor.
    """
    psi = np.asarray(psi)
    if psi.shape != (space.dim,):
        raise ValueError(f"state dim {psi.shape} != product dim {space.dim}")
    M = psi.reshape(space.n1, space.n2)
    if keep == 1:
        return M @ M.conj().T
    elif keep == 2:
        return M.T @ M.conj()
    raise ValueError(f"keep must be 1 or 2, got {keep}")


def purity(rho):
    """tr rho^2 = sum |rho_ij|^2 for Hermitian rho."""
    return float(np.sum(np.abs(rho) ** 2))


@dataclass(frozen=True)
class CorrelationSeries:
    """C(t) and D(t) on a common time grid."""

    times: np.ndarray
    C: np.ndarray
    D: np.ndarray


@dataclass(frozen=True)
class DecayFit:
    """Asymptotic coefficients of C(t): diffusion sigma (mixing) and plateau cbar
    (regular), with the implied fidelity decay times."""

    sigma: float
    cbar: float
    tau_em: float | None
    tau_ne: float | None
    fit_window: tuple


def _correlation_point(prop, psi0_p, s1, s2, space, t):
    """(C, D) at one time; psi0_p is the initial state in the H eigenbasis."""
    phi_p = prop.apply_eig(psi0_p, t)
    expect = np.vdot(psi0_p, phi_p)  # <Sigma>
    second = float(np.real(np.vdot(phi_p, phi_p)))  # <Sigma^2>, Sigma Hermitian
    C = second - abs(expect) ** 2

    # D via the projector identity: only the initial factor vectors enter.
    phi = prop.from_eigenbasis(phi_p).reshape(space.n1, space.n2)
    p1 = float(np.sum(np.abs(s1.conj() @ phi) ** 2))  # <phi|P1|phi>
    p2 = float(np.sum(np.abs(phi @ s2.conj()) ** 2))  # <phi|P2|phi>
    D = p1 + p2 - 2 * abs(expect) ** 2
    return C, D


def correlation_C(specH, V, psi0, t, hbar):
    """Variance of Sigma(t) in psi0."""
    prop = SigmaPropagator(specH, V, hbar)
    psi0_p = prop.to_eigenbasis(psi0)
    phi_p = prop.apply_eig(psi0_p, t)
    return float(np.real(np.vdot(phi_p, phi_p)) - abs(np.vdot(psi0_p, phi_p)) ** 2)


def correlation_D(specH, V, psi0_factors, t, hbar, space):
    """Off-diagonal correlation sum D(t) for a product initial state (s1, s2)."""
    s1, s2 = (np.asarray(s) for s in psi0_factors)
    if s1.shape != (space.n1,) or s2.shape != (space.n2,):
        raise ValueError("initial factors do not match the product space")
    prop = SigmaPropagator(specH, V, hbar)
    psi0_p = prop.to_eigenbasis(product_state(s1, s2))
    return _correlation_point(prop, psi0_p, s1, s2, space, t)[1]


def correlation_series(specH, V, s1, s2, times, hbar, space):
    """C(t) and D(t) for the product initial state s1 (x) s2 on a time grid."""
    prop = SigmaPropagator(specH, V, hbar)
    psi0_p = prop.to_eigenbasis(product_state(s1, s2))
    C = np.empty(len(times))
    D = np.empty(len(times))
    for i, t in enumerate(times):
        C[i], D[i] = _correlation_point(prop, psi0_p, s1, s2, space, t)
    return CorrelationSeries(times=np.asarray(times, dtype=float), C=C, D=D)


def linear_response_curves(series, delta, hbar):
    """Leading-order predictions: |F|^2 = 1 - (d/h)^2 C, F_P = 1 - 2(d/h)^2 (C - D).

    Raw values are reported even when they drop below 0 at large t.
    """
    x = (delta / hbar) ** 2
    F2_pred = 1.0 - x * series.C
    FP_pred = 1.0 - 2.0 * x * (series.C - series.D)
    return F2_pred, FP_pred


def fit_decay(series, window, delta=None, hbar=None):
    """Asymptotic coefficients over a window beyond the Zeno time.

    sigma = mean C/(2t), cbar = mean C/t^2; oscillations are averaged over.
    tau_em = hbar^2 / (2 sigma delta^2) and tau_ne = hbar / (sqrt(cbar) delta)
    are filled in when delta and hbar are supplied.
    """
    t_min, t_max = window
    mask = (series.times >= t_min) & (series.times <= t_max) & (series.times > 0)
    if not np.any(mask):
        raise ValueError(f"empty fit window {window} for the given time grid")
    t = series.times[mask]
    C = series.C[mask]
    sigma = float(np.mean(C / (2 * t)))
    cbar = float(np.mean(C / t**2))
    tau_em = tau_ne = None
    if delta is not None and hbar is not None and delta > 0:
        tau_em = hbar**2 / (2 * sigma * delta**2) if sigma > 0 else None
        tau_ne = hbar / (np.sqrt(cbar) * delta) if cbar > 0 else None
    return DecayFit(sigma=sigma, cbar=cbar, tau_em=tau_em, tau_ne=tau_ne,
                    fit_window=(t_min, t_max))
