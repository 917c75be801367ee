"""Brute-force quantifiers computed from explicit 4x4 density matrices.

Nothing here goes through the closed forms in `quantifiers`; these
routines exist to validate them (and, where the published formulas
disagree with each other, to adjudicate).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .spin_core import (
    IDENTITY_2,
    PAULI,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SINGLET,
    fano_decompose,
    projector,
    require_density_matrix,
)

SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)
CHSH_FIXED_OPERATOR = np.sqrt(2.0) * (np.kron(SIGMA_X, SIGMA_X) + np.kron(SIGMA_Z, SIGMA_Z))

_E = np.eye(4, dtype=complex)
BELL_STATES = (
    (_E[:, 0] + _E[:, 3]) / np.sqrt(2.0),  # Phi+
    (_E[:, 0] - _E[:, 3]) / np.sqrt(2.0),  # Phi-
    (_E[:, 1] + _E[:, 2]) / np.sqrt(2.0),  # Psi+
    (_E[:, 1] - _E[:, 2]) / np.sqrt(2.0),  # Psi- (singlet)
)


@dataclass(frozen=True)
class MeasurementBasis:
    """Projective measurement direction on subsystem 1, on the Bloch sphere."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi:
            raise ValueError("theta must lie in [0, pi]")
        if not 0.0 <= self.phi < 2.0 * np.pi:
            raise ValueError("phi must lie in [0, 2 pi)")

    @property
    def direction(self) -> np.ndarray:
        return np.array(
            [
                np.sin(self.theta) * np.cos(self.phi),
                np.sin(self.theta) * np.sin(self.phi),
                np.cos(self.theta),
            ]
        )

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        """Orthogonal rank-1 projectors onto +/- the measurement direction."""
        n_sigma = sum(n * s for n, s in zip(self.direction, PAULI))
        return 0.5 * (IDENTITY_2 + n_sigma), 0.5 * (IDENTITY_2 - n_sigma)


def trace_norm(matrix: np.ndarray) -> float:
    """Schatten 1-norm: sum of singular values."""
    return float(np.sum(np.linalg.svd(matrix, compute_uv=False)))


def measurement_dephase(rho: np.ndarray, theta: float, phi: float) -> np.ndarray:
    """Dephasing of rho under the subsystem-1 measurement along (theta, phi)."""
    n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
    n_sigma = sum(ni * s for ni, s in zip(n, PAULI))
    e0 = np.kron(0.5 * (IDENTITY_2 + n_sigma), IDENTITY_2)
    e1 = np.kron(0.5 * (IDENTITY_2 - n_sigma), IDENTITY_2)
    return e0 @ rho @ e0 + e1 @ rho @ e1


def wootters_concurrence(rho: np.ndarray) -> float:
    """Concurrence from the spin-flip construction.

    max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
    eigenvalues of rho (Y x Y) rho* (Y x Y); conjugation is taken in the
    computational basis.
    """
    rho = require_density_matrix(rho)
    rho_tilde = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    eigs = np.linalg.eigvals(rho @ rho_tilde)
    lam = np.sqrt(np.clip(np.real(eigs), 0.0, None))
    lam[::-1].sort()
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def correlation_matrix(rho: np.ndarray) -> np.ndarray:
    """Full 3x3 Pauli correlation matrix T_ij = <sigma_i (x) sigma_j>."""
    rho = require_density_matrix(rho)
    return np.array(
        [[np.trace(rho @ np.kron(si, sj)).real for sj in PAULI] for si in PAULI]
    )


def correlation_oracle(rho: np.ndarray, cross_atol: float = 1e-12) -> np.ndarray:
    """Same-axis Pauli correlators (<xx>, <yy>, <zz>) as direct traces.

    Also asserts that the cross-axis correlators vanish, which holds for
    every dimer eigenstate and thermal state; states that mix axes are
    rejected so they cannot silently masquerade as dimer output.
    """
    tensor = correlation_matrix(rho)
    off = tensor - np.diag(np.diag(tensor))
    worst = float(np.max(np.abs(off)))
    if worst > cross_atol:
        raise ValueError(f"cross-axis correlators do not vanish (max {worst:.3e})")
    return np.diag(tensor).copy()


def chsh_max(rho: np.ndarray, mode: str = "optimized") -> float:
    """CHSH expectation magnitude for a two-qubit state.

    mode "fixed" evaluates |tr(rho sqrt(2)(XX + ZZ))|, the standard
    diagonal direction set. mode "optimized" maximizes over all four
    measurement directions via the Horodecki criterion,
    2 sqrt(m1 + m2) with m1, m2 the two largest eigenvalues of T^T T.
    """
    if mode == "fixed":
        rho = require_density_matrix(rho)
        return float(abs(np.trace(rho @ CHSH_FIXED_OPERATOR).real))
    if mode == "optimized":
        t = correlation_matrix(rho)
        m = np.linalg.eigvalsh(t.T @ t)
        return float(2.0 * np.sqrt(m[-1] + m[-2]))
    raise ValueError(f"unknown CHSH mode {mode!r}; expected 'fixed' or 'optimized'")


def chsh_direct_search(rho: np.ndarray, coarse: int = 12) -> float:
    """CHSH maximum by numerical search over measurement directions.

    For fixed directions b, b' on side 2, the optimal side-1 directions
    align with T(b - b') and T(b + b'), so the search runs over the four
    angles of b and b' (coarse grid, then Nelder-Mead). Cross-checks the
    Horodecki value without touching its T^T T eigenvalue algebra.
    """
    t = correlation_matrix(rho)

    def directions(theta, phi):
        return np.stack(
            [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)],
            axis=-1,
        )

    def objective(angles):
        b = directions(angles[..., 0], angles[..., 1])
        bp = directions(angles[..., 2], angles[..., 3])
        return np.linalg.norm((b - bp) @ t.T, axis=-1) + np.linalg.norm(
            (b + bp) @ t.T, axis=-1
        )

    thetas = np.linspace(0.0, np.pi, coarse)
    phis = np.linspace(0.0, 2.0 * np.pi, coarse, endpoint=False)
    grid = np.stack(np.meshgrid(thetas, phis, thetas, phis, indexing="ij"), axis=-1)
    flat = grid.reshape(-1, 4)
    values = objective(flat)
    best = flat[np.argmax(values)]

    result = minimize(
        lambda a: -objective(a),
        best,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 2000},
    )
    return float(max(values.max(), -result.fun))


def _bell_diagonal_correlations(rho: np.ndarray, atol: float = 1e-10) -> np.ndarray:
    fano = fano_decompose(rho, atol=atol)
    local = max(float(np.max(np.abs(fano.a))), float(np.max(np.abs(fano.b))))
    if local > atol or not fano.diagonal:
        raise ValueError("state is not Bell-diagonal (nonzero Bloch vectors or off-diagonal correlations)")
    return fano.c


def trace_norm_discord(rho: np.ndarray, method: str = "numerical_min") -> float:
    """Geometric discord as the minimal trace-norm disturbance under a
    projective measurement on subsystem 1.

    "closed_form_bell_diagonal" requires a Bell-diagonal input and returns
    the middle value of {|c1|, |c2|, |c3|}. "numerical_min" minimizes
    ||rho - dephase(rho)||_1 over the measurement direction with a 64x64
    angular grid plus local refinement; it works for any state and agrees
    with the closed form on Bell-diagonal ones. No normalization factor is
    applied: this is the raw minimized trace norm.
    """
    rho = require_density_matrix(rho)
    if method == "closed_form_bell_diagonal":
        c = _bell_diagonal_correlations(rho)
        return float(np.sort(np.abs(c))[1])
    if method != "numerical_min":
        raise ValueError(
            f"unknown discord method {method!r}; expected 'closed_form_bell_diagonal' or 'numerical_min'"
        )

    thetas = np.linspace(0.0, np.pi, 64)
    phis = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    n = np.stack(
        [np.sin(tt) * np.cos(pp), np.sin(tt) * np.sin(pp), np.cos(tt)], axis=-1
    ).reshape(-1, 3)
    n_sigma = np.einsum("ki,iab->kab", n, np.stack(PAULI))
    p_plus = 0.5 * (IDENTITY_2 + n_sigma)
    p_minus = 0.5 * (IDENTITY_2 - n_sigma)
    e_plus = np.einsum("kab,cd->kacbd", p_plus, IDENTITY_2).reshape(-1, 4, 4)
    e_minus = np.einsum("kab,cd->kacbd", p_minus, IDENTITY_2).reshape(-1, 4, 4)
    dephased = np.einsum("kij,jl,klm->kim", e_plus, rho, e_plus)
    dephased += np.einsum("kij,jl,klm->kim", e_minus, rho, e_minus)
    objective = np.linalg.svd(rho[None, :, :] - dephased, compute_uv=False).sum(axis=-1)

    k_best = int(np.argmin(objective))
    start = np.array([tt.reshape(-1)[k_best], pp.reshape(-1)[k_best]])
    result = minimize(
        lambda a: trace_norm(rho - measurement_dephase(rho, a[0], a[1])),
        start,
        method="Nelder-Mead",
        options={"xatol": 1e-9, "fatol": 1e-10, "maxiter": 1000},
    )
    return float(min(objective[k_best], result.fun))


def werner_state(p: float) -> np.ndarray:
    """Singlet-weighted mixture p |psi-><psi-| + (1 - p) I/4."""
    rho = p * projector(SINGLET) + (1.0 - p) * np.eye(4, dtype=complex) / 4.0
    return require_density_matrix(rho, name="werner state")


def random_density_matrix(rng: np.random.Generator) -> np.ndarray:
    """Full-rank random two-qubit state from the Ginibre construction."""
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_bell_diagonal_state(rng: np.random.Generator) -> np.ndarray:
    """Random mixture of the four Bell states (uniform on the simplex)."""
    weights = rng.dirichlet(np.ones(4))
    rho = sum(w * projector(b) for w, b in zip(weights, BELL_STATES))
    return rho
