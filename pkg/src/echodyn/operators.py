"""Truncated boson/spin operator algebras and the driven Jaynes-Cummings Hamiltonian.

The composite Hilbert space is spin (factor 1, the "central system") tensor
one boson mode (factor 2, the "environment").  Composite basis index
k = i*n2 + nu, i.e. numpy.kron ordering with the spin factor first.
"""

from dataclasses import dataclass, field

import numpy as np

HERMITICITY_TOL = 1e-13


def _is_half_integer(x):
    return abs(2 * x - round(2 * x)) < 1e-12


@dataclass(frozen=True)
class ProductSpace:
    """Dimensions of the spin (n1 = 2J+1) and boson (n2 = N_b) factors."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 2:
            raise ValueError(f"factor dimensions must be >= 2, got {self.n1}x{self.n2}")

    @property
    def dim(self):
        return self.n1 * self.n2


@dataclass(frozen=True)
class JCParams:
    """Parameters of the Jaynes-Cummings Hamiltonian with co- and counter-rotating terms.

    hbar is tied to the spin magnitude by hbar = 1/J, so the physical angular
    momentum hbar*J = 1 is fixed and J -> infinity is the classical limit.
    """

    J: float
    omega: float
    epsilon: float
    G: complex
    Gprime: complex
    nboson: int

    def __post_init__(self):
        if not _is_half_integer(self.J) or self.J <= 0:
            raise ValueError(f"J must be a positive half-integer, got {self.J}")
        if self.nboson < 2:
            raise ValueError(f"nboson must be >= 2, got {self.nboson}")

    @property
    def hbar(self):
        return 1.0 / self.J

    @property
    def space(self):
        return ProductSpace(int(round(2 * self.J)) + 1, self.nboson)


def boson_ops(nboson):
    """Annihilation/creation operators on the truncated Fock basis |0>..|nboson-1>.

    Returns (a, adag).  The truncation breaks [a, adag] = 1 only in the
    (nboson-1, nboson-1) entry.
    """
    if nboson < 2:
        raise ValueError(f"nboson must be >= 2, got {nboson}")
    a = np.diag(np.sqrt(np.arange(1, nboson, dtype=float)), k=1).astype(complex)
    return a, a.conj().T


def spin_ops(J):
    """SU(2) generators Jz, J+, J- on the basis |J,m>, m = J..-J descending.

    Dimensionless; the physical perturbation generator is hbar*Jz.
    """
    if not _is_half_integer(J) or J <= 0:
        raise ValueError(f"J must be a positive half-integer, got {J}")
    n = int(round(2 * J)) + 1
    m = J - np.arange(n)
    Jz = np.diag(m).astype(complex)
    # J+|J,m> = sqrt(J(J+1) - m(m+1)) |J,m+1>; with m descending the target
    # sits one row above, so the coefficients fill the superdiagonal.
    c = np.sqrt(J * (J + 1) - m[1:] * (m[1:] + 1))
    Jp = np.diag(c, k=1).astype(complex)
    Jm = Jp.conj().T
    return Jz, Jp, Jm


def embed(op, which, space):
    """Lift a factor operator to the product space: op (x) I or I (x) op."""
    op = np.asarray(op)
    if which == 1:
        if op.shape != (space.n1, space.n1):
            raise ValueError(f"operator dim {op.shape[0]} != n1 = {space.n1}")
        return np.kron(op, np.eye(space.n2))
    elif which == 2:
        if op.shape != (space.n2, space.n2):
            raise ValueError(f"operator dim {op.shape[0]} != n2 = {space.n2}")
        return np.kron(np.eye(space.n1), op)
    raise ValueError(f"which must be 1 or 2, got {which}")


def build_jc(params):
    """Assemble H = hw a'a + he Jz + h/sqrt(2J) (G a J+ + G' a J- + h.c.)
    and the dephasing perturbation generator V = hbar*Jz on the product space.

    Returns (H, V) as dense complex matrices of dim (2J+1)*nboson.
    """
    space = params.space
    hbar = params.hbar
    a, adag = boson_ops(params.nboson)
    Jz, Jp, Jm = spin_ops(params.J)

    A = embed(a, 2, space)
    JZ = embed(Jz, 1, space)
    JP = embed(Jp, 1, space)
    JM = embed(Jm, 1, space)

    coupling = params.G * (A @ JP) + params.Gprime * (A @ JM)
    H = (
        hbar * params.omega * (A.conj().T @ A)
        + hbar * params.epsilon * JZ
        + hbar / np.sqrt(2 * params.J) * (coupling + coupling.conj().T)
    )
    V = hbar * JZ
    return H, V
