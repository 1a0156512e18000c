"""Gaussian-wavepacket purity from the complex covariance matrix of the packet.

A Gaussian packet psi(x) ~ exp(i x.A x) on a configuration space split into
d1 + d2 coordinates has an hbar-independent reduced purity given by a block
determinant of A; the off-diagonal blocks A12, A21 encode the entanglement.
"""

from dataclasses import dataclass

import numpy as np

SYMMETRY_TOL = 1e-10


@dataclass(frozen=True)
class CovarianceMatrix:
    """Complex symmetric (d1+d2)x(d1+d2) matrix with positive-definite imaginary part."""

    d1: int
    d2: int
    A: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=complex)
        d = self.d1 + self.d2
        if A.shape != (d, d):
            raise ValueError(f"matrix shape {A.shape} != ({d}, {d})")
        if np.abs(A - A.T).max() > SYMMETRY_TOL * max(1.0, np.abs(A).max()):
            raise ValueError("covariance matrix must be symmetric (A = A^T)")
        try:
            np.linalg.cholesky(A.imag)
        except np.linalg.LinAlgError:
            raise ValueError("Im A must be positive definite (normalizable packet)")
        object.__setattr__(self, "A", A)

    @property
    def A11(self):
        return self.A[: self.d1, : self.d1]

    @property
    def A12(self):
        return self.A[: self.d1, self.d1 :]

    @property
    def A21(self):
        return self.A[self.d1 :, : self.d1]

    @property
    def A22(self):
        return self.A[self.d1 :, self.d1 :]


def wavepacket_purity(cov):
    """Reduced purity of the Gaussian packet: det(Im A) |det M|^{-1/2}.

    M is the 4x4-block matrix coupling the two copies of the packet through the
    off-diagonal covariance blocks; it is block-diagonal when A12 = A21 = 0,
    giving purity exactly 1.
    """
    B11 = cov.A11.imag
    B22 = cov.A22.imag
    A12 = cov.A12
    A21 = cov.A21
    Z12 = np.zeros((cov.d1, cov.d2))
    Z11 = np.zeros((cov.d1, cov.d1))
    Z22 = np.zeros((cov.d2, cov.d2))
    i2 = 0.5j
    M = np.block(
        [
            [B11, -i2 * A12, Z11, i2 * A12.conj()],
            [-i2 * A21, B22, i2 * A21.conj(), Z22],
            [Z11, i2 * A12.conj(), B11, -i2 * A12],
            [i2 * A21.conj(), Z22, -i2 * A21, B22],
        ]
    )
    det_m = np.linalg.det(M)
    if abs(det_m) == 0:
        raise ValueError("degenerate block determinant")
    return float(np.linalg.det(cov.A.imag).real * abs(det_m) ** (-0.5))


def quadratic_decay_constant(A0, B, delta, step=1e-3):
    """Leading-order decay constant K in F_P(t) = 1 - (t delta / K)^2 + O(t^4)
    for a linearly drifting covariance A(t) = A0 + t*delta*B.

    K is extracted from the second derivative of the purity at t = 0 by central
    finite differences with Richardson extrapolation; requires A0 block-diagonal
    so the purity starts at 1.  Returns inf when the drift leaves the blocks
    uncoupled (no decay).
    """
    if np.abs(A0.A12).max() > SYMMETRY_TOL or np.abs(A0.A21).max() > SYMMETRY_TOL:
        raise ValueError("A0 must have vanishing off-diagonal blocks")
    B = np.asarray(B, dtype=complex)
    h = step * max(1.0, np.abs(B).max())

    def purity_at(s):
        return wavepacket_purity(CovarianceMatrix(A0.d1, A0.d2, A0.A + s * B))

    def second_derivative(h):
        return (purity_at(h) - 2.0 + purity_at(-h)) / h**2

    # Richardson: (4 D(h/2) - D(h)) / 3 kills the O(h^2) error term
    d2 = (4 * second_derivative(h / 2) - second_derivative(h)) / 3

    first = (purity_at(h) - purity_at(-h)) / (2 * h)
    if abs(first) > 1e-4 * max(1.0, abs(d2)):
        raise ValueError("first derivative does not vanish; decay is not quadratic")
    if d2 >= -1e-12:
        return float("inf")  # no coupling decay
    return float(np.sqrt(-2.0 / d2))


def read_matrix(path):
    """Read a complex matrix with a block-split header from a plain-text file.

    Format: comment lines start with '#'; first data line is "d1 d2"; then
    d1+d2 rows of d1+d2 whitespace-separated "re,im" entries.
    Returns (d1, d2, matrix) without packet-validity checks.
    """
    with open(path) as f:
        lines = [ln.strip() for ln in f if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError(f"{path}: empty matrix file")
    try:
        d1, d2 = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise ValueError(f"{path}: header must be 'd1 d2', got {lines[0]!r}")
    d = d1 + d2
    if len(lines) != 1 + d:
        raise ValueError(f"{path}: expected {d} matrix rows, got {len(lines) - 1}")
    A = np.zeros((d, d), dtype=complex)
    for i, ln in enumerate(lines[1:]):
        toks = ln.split()
        if len(toks) != d:
            raise ValueError(f"{path}: row {i} has {len(toks)} entries, expected {d}")
        for j, tok in enumerate(toks):
            re, im = (float(p) for p in tok.split(","))
            A[i, j] = re + 1j * im
    return d1, d2, A


def read_covariance(path):
    """Read a CovarianceMatrix (validated Gaussian-packet matrix) from a file."""
    return CovarianceMatrix(*read_matrix(path))


def write_covariance(path, cov):
    """Write a CovarianceMatrix in the format read_covariance expects."""
    with open(path, "w") as f:
        f.write(f"{cov.d1} {cov.d2}\n")
        for row in cov.A:
            f.write(" ".join(f"{z.real:.17g},{z.imag:.17g}" for z in row) + "\n")
