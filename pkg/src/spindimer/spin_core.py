"""Exact quantum mechanics of the two-site spin-1/2 exchange dimer.

Operators act on the 4-dimensional product basis |00>, |01>, |10>, |11>,
with |0> the m = +1/2 state. Natural units throughout: hbar = k_B = 1;
energies are in units of the exchange coupling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar

import numpy as np

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)
IDENTITY_4 = np.eye(4, dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

# Same-axis two-site Pauli products sigma_a (x) sigma_a, and spin-1/2 site
# operators S = sigma/2 embedded on each site.
SIGMA_SIGMA = tuple(np.kron(s, s) for s in PAULI)
SPIN_SITE_1 = tuple(np.kron(0.5 * s, IDENTITY_2) for s in PAULI)
SPIN_SITE_2 = tuple(np.kron(IDENTITY_2, 0.5 * s) for s in PAULI)
TOTAL_SZ = SPIN_SITE_1[2] + SPIN_SITE_2[2]

_E = np.eye(4, dtype=complex)
TRIPLET_PLUS = _E[:, 0].copy()                        # |00>, (s, m) = (1, +1)
TRIPLET_ZERO = (_E[:, 1] + _E[:, 2]) / np.sqrt(2.0)   # (1, 0)
TRIPLET_MINUS = _E[:, 3].copy()                       # |11>, (1, -1)
SINGLET = (_E[:, 1] - _E[:, 2]) / np.sqrt(2.0)        # (0, 0)

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10


def projector(psi: np.ndarray) -> np.ndarray:
    """Rank-1 projector |psi><psi| for a (not necessarily normalized) ket."""
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def require_hermitian(op: np.ndarray, name: str = "operator", atol: float = HERMITICITY_ATOL) -> np.ndarray:
    op = np.asarray(op, dtype=complex)
    if op.shape != (4, 4):
        raise ValueError(f"{name} must be a 4x4 matrix, got shape {op.shape}")
    if np.max(np.abs(op - op.conj().T)) > atol:
        raise ValueError(f"{name} is not Hermitian within {atol:g}")
    return op


def require_density_matrix(rho: np.ndarray, name: str = "rho") -> np.ndarray:
    """Validate a two-qubit density matrix: Hermitian, unit trace, positive."""
    rho = require_hermitian(rho, name=name)
    if abs(np.trace(rho).real - 1.0) > TRACE_ATOL or abs(np.trace(rho).imag) > TRACE_ATOL:
        raise ValueError(f"{name} does not have unit trace")
    if np.min(np.linalg.eigvalsh(rho)) < EIGENVALUE_FLOOR:
        raise ValueError(f"{name} has a negative eigenvalue below {EIGENVALUE_FLOOR:g}")
    return rho


@dataclass(frozen=True)
class DimerModel:
    """Physical configuration of the dimer.

    coupling is the exchange constant J; positive J puts the singlet at the
    bottom of the spectrum. r1 and r2 are the positions of the two magnetic
    centers (any length unit, as long as it is the inverse of the wave-vector
    unit). g is the Lande factor; the Bohr magneton is 1 in natural units.
    The ion count and spin are fixed by the model and not configurable.
    """

    coupling: float = 1.0
    r1: np.ndarray = field(default_factory=lambda: np.zeros(3))
    r2: np.ndarray = field(default_factory=lambda: np.array([1.0, 0.0, 0.0]))
    g: float = 2.0

    n_ions: ClassVar[int] = 2
    spin: ClassVar[float] = 0.5

    def __post_init__(self):
        object.__setattr__(self, "r1", np.asarray(self.r1, dtype=float))
        object.__setattr__(self, "r2", np.asarray(self.r2, dtype=float))
        if self.r1.shape != (3,) or self.r2.shape != (3,):
            raise ValueError("r1 and r2 must be 3-vectors")
        if np.linalg.norm(self.r1 - self.r2) == 0.0:
            raise ValueError("the two sites must have strictly positive separation")

    @property
    def separation(self) -> np.ndarray:
        return self.r1 - self.r2


def build_hamiltonian(model: DimerModel) -> np.ndarray:
    """Exchange Hamiltonian of the dimer in the product basis.

    Sign convention: the triplet sits at +J/4 and the singlet at -3J/4, so
    positive coupling favors the entangled singlet ground state.
    """
    j = model.coupling
    return (j / 4.0) * (SIGMA_SIGMA[0] + SIGMA_SIGMA[1] + SIGMA_SIGMA[2])


@dataclass(frozen=True)
class EigenSystem:
    """Spectrum of a dimer Hamiltonian.

    Column k of `states` is the eigenvector for `energies[k]`; `labels[k]`
    is its (s, m_s) pair. Energies ascend, ties broken by m_s descending.
    """

    energies: np.ndarray
    states: np.ndarray
    labels: tuple[tuple[int, int], ...]

    def state(self, s: int, m_s: int) -> np.ndarray:
        k = self.labels.index((s, m_s))
        return self.states[:, k]


_COUPLED_LABELS = ((1, 1), (1, 0), (1, -1), (0, 0))
_COUPLED_STATES = (TRIPLET_PLUS, TRIPLET_ZERO, TRIPLET_MINUS, SINGLET)


def eigensystem(hamiltonian: np.ndarray) -> EigenSystem:
    """Diagonalize a dimer Hamiltonian analytically in the coupled basis.

    The matrix must be block-diagonal in the product basis with a symmetric
    2x2 central block, which makes the singlet/triplet kets exact
    eigenvectors; anything else is rejected. No iterative solver is used,
    so energies of exact inputs come out exact.
    """
    h = require_hermitian(hamiltonian, name="hamiltonian")
    scale = max(1.0, float(np.max(np.abs(h))))
    atol = 1e-9 * scale

    # Analytic eigenvalues: the diagonal corners, and d +/- o for the
    # central block [[d, o], [o, d]].
    d = 0.5 * (h[1, 1].real + h[2, 2].real)
    o = h[1, 2].real
    energies = (h[0, 0].real, d + o, h[3, 3].real, d - o)

    entries = []
    for label, state, energy in zip(_COUPLED_LABELS, _COUPLED_STATES, energies):
        residual = np.max(np.abs(h @ state - energy * state))
        if residual > atol:
            raise ValueError(
                "hamiltonian is not diagonal in the singlet-triplet basis "
                f"(residual {residual:.3e} for (s, m_s) = {label})"
            )
        entries.append((energy, label, state))

    entries.sort(key=lambda e: (e[0], -e[1][1], -e[1][0]))
    return EigenSystem(
        energies=np.array([e[0] for e in entries]),
        states=np.column_stack([e[2] for e in entries]),
        labels=tuple(e[1] for e in entries),
    )


def thermal_state(model: DimerModel, temperature: float) -> np.ndarray:
    """Gibbs state exp(-H/T)/Z of the dimer at temperature T (k_B = 1).

    T = 0 returns the projector onto the ground manifold, normalized over
    its degeneracy, rather than taking a numerical limit.
    """
    if temperature < 0.0:
        raise ValueError("temperature must be nonnegative")
    eig = eigensystem(build_hamiltonian(model))
    energies = eig.energies
    if temperature == 0.0:
        gap_atol = 1e-12 * max(1.0, abs(model.coupling))
        weights = (energies - energies[0] <= gap_atol).astype(float)
    else:
        weights = np.exp(-(energies - energies[0]) / temperature)
    weights /= weights.sum()
    return (eig.states * weights) @ eig.states.conj().T


@dataclass(frozen=True)
class FanoVector:
    """Pauli decomposition of a two-qubit state.

    `a` and `b` are the local Bloch vectors, `tensor` the full 3x3
    correlation tensor <sigma_i (x) sigma_j>, and `c` its diagonal.
    `diagonal` records whether the off-diagonal correlations vanish.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    tensor: np.ndarray
    diagonal: bool


def fano_decompose(rho: np.ndarray, atol: float = 1e-12) -> FanoVector:
    """Bloch vectors and correlation tensor of a valid density matrix."""
    rho = require_density_matrix(rho)
    a = np.array([np.trace(rho @ np.kron(s, IDENTITY_2)).real for s in PAULI])
    b = np.array([np.trace(rho @ np.kron(IDENTITY_2, s)).real for s in PAULI])
    tensor = np.array(
        [[np.trace(rho @ np.kron(si, sj)).real for sj in PAULI] for si in PAULI]
    )
    off = tensor - np.diag(np.diag(tensor))
    return FanoVector(
        a=a,
        b=b,
        c=np.diag(tensor).copy(),
        tensor=tensor,
        diagonal=bool(np.max(np.abs(off)) <= atol),
    )


def fano_reconstruct(fano: FanoVector) -> np.ndarray:
    """Rebuild the density matrix from its Pauli decomposition (exact for
    any state, since the full correlation tensor is kept)."""
    rho = IDENTITY_4.copy()
    for i, s in enumerate(PAULI):
        rho += fano.a[i] * np.kron(s, IDENTITY_2)
        rho += fano.b[i] * np.kron(IDENTITY_2, s)
        for j, t in enumerate(PAULI):
            rho += fano.tensor[i, j] * np.kron(s, t)
    return rho / 4.0


def bell_diagonal_state(c: np.ndarray) -> np.ndarray:
    """Two-qubit state with zero Bloch vectors and diagonal correlations c.

    Raises if c falls outside the Bell-state tetrahedron of physical states.
    The isotropic case c = (w, w, w) is the state family whose same-axis
    correlators all equal w; it is valid for -1 <= w <= 1/3.
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (3,):
        raise ValueError("c must be a 3-vector")
    rho = IDENTITY_4.copy()
    for ci, ss in zip(c, SIGMA_SIGMA):
        rho = rho + ci * ss
    return require_density_matrix(rho / 4.0, name="bell-diagonal state")
