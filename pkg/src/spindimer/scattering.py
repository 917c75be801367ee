"""Structure factors of the dimer and the spin correlation they encode.

Everything here is a function of the scalar scattering phase
x = q . (r1 - r2); vector inputs are reduced to x immediately.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spin_core import (
    EigenSystem,
    SPIN_SITE_1,
    SPIN_SITE_2,
    require_density_matrix,
)


def _finite(x, name: str = "x"):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def scattering_phase(q: np.ndarray, r1: np.ndarray, r2: np.ndarray) -> float:
    """Scalar phase q . (r1 - r2) from an explicit scattering geometry."""
    q = _finite(q, "q")
    r1 = _finite(r1, "r1")
    r2 = _finite(r2, "r2")
    if q.shape != (3,) or r1.shape != (3,) or r2.shape != (3,):
        raise ValueError("q, r1 and r2 must be 3-vectors")
    return float(np.dot(q, r1 - r2))


@dataclass(frozen=True)
class ScatteringInput:
    """A diffraction point, given either as the phase x or as (q, r1, r2)."""

    x: float | None = None
    q: np.ndarray | None = None
    r1: np.ndarray | None = None
    r2: np.ndarray | None = None

    def __post_init__(self):
        vector_mode = self.q is not None or self.r1 is not None or self.r2 is not None
        if self.x is not None and vector_mode:
            raise ValueError("give either x or (q, r1, r2), not both")
        if self.x is None:
            if self.q is None or self.r1 is None or self.r2 is None:
                raise ValueError("vector mode needs all of q, r1 and r2")
            object.__setattr__(self, "q", _finite(self.q, "q"))
            object.__setattr__(self, "r1", _finite(self.r1, "r1"))
            object.__setattr__(self, "r2", _finite(self.r2, "r2"))
        else:
            object.__setattr__(self, "x", float(_finite(self.x, "x")))

    @property
    def phase(self) -> float:
        if self.x is not None:
            return self.x
        return scattering_phase(self.q, self.r1, self.r2)

    @property
    def phase_mod_2pi(self) -> float:
        """Reduced phase for display; computations always use the raw phase."""
        return float(np.mod(self.phase, 2.0 * np.pi))


def scalar_structure_factor(x):
    """Energy-integrated scattering intensity (1 - cos x)/2, in [0, 1].

    Vanishes at x = 0, peaks at x = pi, has period 2*pi and is even in x.
    Accepts scalars or arrays.
    """
    x = _finite(x)
    return 0.5 * (1.0 - np.cos(x))


def correlation_from_structure(x):
    """Same-axis spin-spin correlation extracted from the structure factor.

    Returns the pair (C, Re C) with C = exp(-i x) * S(x). The real part
    cos(x) (1 - cos x)/2 is the physical correlation used by every
    downstream quantifier; the complex value is kept for reference.
    """
    x = _finite(x)
    c = np.exp(-1j * x) * scalar_structure_factor(x)
    return c, np.real(c)


def exclusive_structure_factor(
    initial: np.ndarray,
    eigensys: EigenSystem,
    q: np.ndarray,
    r1: np.ndarray,
    r2: np.ndarray,
) -> np.ndarray:
    """3x3 tensor of transition intensities out of `initial`.

    Entry (a, b) is sum_f <i|U_a^dag|f><f|U_b|i> with
    U_a = S_1^a e^{i q.r1} + S_2^a e^{i q.r2}, the sum running over the
    eigenstates whose energy differs from the initial one (elastic terms
    drop out). For the singlet this reduces to delta_ab times the scalar
    structure factor.
    """
    initial = np.asarray(initial, dtype=complex)
    if initial.shape != (4,):
        raise ValueError("initial must be a 4-component state vector")
    if abs(np.linalg.norm(initial) - 1.0) > 1e-10:
        raise ValueError("initial state must be normalized")
    q = _finite(q, "q")
    if q.shape != (3,):
        raise ValueError("q must be a 3-vector")

    phase1 = np.exp(1j * np.dot(q, _finite(r1, "r1")))
    phase2 = np.exp(1j * np.dot(q, _finite(r2, "r2")))
    ops = [phase1 * s1 + phase2 * s2 for s1, s2 in zip(SPIN_SITE_1, SPIN_SITE_2)]

    energies = eigensys.energies
    e_initial = float(
        np.sum(np.abs(eigensys.states.conj().T @ initial) ** 2 * energies)
    )
    atol = 1e-9 * max(1.0, float(np.max(np.abs(energies))))
    final = np.abs(energies - e_initial) > atol

    # amplitudes[a, f] = <f|U_a|i> for the selected final states
    amplitudes = np.array(
        [eigensys.states[:, final].conj().T @ (op @ initial) for op in ops]
    )
    return amplitudes.conj() @ amplitudes.T


def integrated_structure_factor(
    rho: np.ndarray,
    q: np.ndarray,
    r1: np.ndarray,
    r2: np.ndarray,
) -> complex:
    """Energy-integrated double site sum of same-axis spin correlators.

    Evaluates sum_a sum_{l,m} e^{i q.(r_l - r_m)} <S_l^a S_m^a> on rho.
    Cross-axis terms are omitted: they vanish identically for dimer
    eigenstates and thermal states (the oracle asserts this).
    """
    rho = require_density_matrix(rho)
    positions = (np.asarray(r1, dtype=float), np.asarray(r2, dtype=float))
    sites = (SPIN_SITE_1, SPIN_SITE_2)
    total = 0.0 + 0.0j
    for axis in range(3):
        for l in range(2):
            for m in range(2):
                phase = np.exp(1j * scattering_phase(q, positions[l], positions[m]))
                total += phase * np.trace(rho @ sites[l][axis] @ sites[m][axis])
    return complex(total)
