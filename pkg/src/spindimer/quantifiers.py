"""Closed-form quantum-correlation quantifiers versus the scattering phase.

Each function takes the scalar phase x = q . (r1 - r2) and evaluates a
published closed form built on the structure factor S(x) and the real
correlation Re C(x). The independent density-matrix checks live in
`oracle`; this module is deliberately formula-only.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np
from scipy.special import xlogy

from .scattering import correlation_from_structure, scalar_structure_factor
from .spin_core import DimerModel

TSIRELSON_BOUND = 2.0 * np.sqrt(2.0)
DISCORD_VARIANTS = ("verbatim", "figure-consistent")


def real_correlation(x):
    """Physical spin-spin correlation Re C(x) = cos(x) (1 - cos x)/2."""
    return correlation_from_structure(x)[1]


def witness(x):
    """Susceptibility-based entanglement witness 2 + 3 Re C(x).

    Negative values certify entanglement; positive values are inconclusive.
    """
    return 2.0 + 3.0 * real_correlation(x)


def susceptibility(temperature: float, re_c: float, model: DimerModel) -> float:
    """Average magnetic susceptibility N g^2 (1 + Re C) / (2 T).

    Units are (g mu_B)^2 per energy with mu_B = 1; re_c must lie in
    [-1, 1/3], the physical range of the pairwise correlation.
    """
    if temperature <= 0.0:
        raise ValueError("temperature must be positive")
    return model.n_ions * model.g**2 * (1.0 + re_c) / (2.0 * temperature)


def witness_from_susceptibility(chi: float, temperature: float, model: DimerModel) -> float:
    """Witness recovered from a measured susceptibility.

    Composing with `susceptibility` reproduces `witness` identically; the
    g, N, S and T dependence cancels algebraically.
    """
    if temperature <= 0.0:
        raise ValueError("temperature must be positive")
    return 3.0 * temperature * chi / (model.g**2 * model.n_ions * model.spin) - 1.0


def signed_concurrence(x):
    """Concurrence before clipping at zero: -(1 + 3 Re C(x))/2.

    Its sign changes mark the entanglement window boundaries, which the
    clipped form cannot expose to a root finder.
    """
    return -0.5 * (1.0 + 3.0 * real_correlation(x))


def concurrence(x):
    """Two-qubit concurrence max(0, -(1 + 3 Re C(x))/2), in [0, 1]."""
    return np.maximum(0.0, signed_concurrence(x))


def entanglement_of_formation(conc):
    """Binary-entropy function of the concurrence, in [0, 1].

    Uses the continuous extension 0 log 0 = 0, so the endpoints come out
    exact: E(0) = 0 and E(1) = 1.
    """
    conc = np.asarray(conc, dtype=float)
    if np.any(conc < 0.0) or np.any(conc > 1.0):
        raise ValueError("concurrence must lie in [0, 1]")
    gamma_plus = 0.5 * (1.0 + np.sqrt(1.0 - conc**2))
    gamma_minus = 1.0 - gamma_plus
    entropy = -(xlogy(gamma_plus, gamma_plus) + xlogy(gamma_minus, gamma_minus))
    return entropy / np.log(2.0)


def bell_mean(x):
    """Mean of the fixed-direction Bell operator, 2 sqrt(2) S(x).

    Exceeding 2 signals a Bell-inequality violation; the quantum maximum
    2 sqrt(2) is reached only at x = pi.
    """
    return TSIRELSON_BOUND * scalar_structure_factor(x)


def geometric_discord(x, variant: str = "figure-consistent"):
    """Trace-norm geometric discord, in the two published readings.

    The two variants differ by the placement of a factor 2 and cannot both
    be right: `verbatim` is (1 - cos x)/4 = S(x)/2, which stays positive
    at x = pi/2; `figure-consistent` is |Re C(x)|/2, which vanishes with
    the correlation at pi/2 and 3 pi/2. Both agree (0.5) at x = pi. The
    inconsistency is surfaced by the verification report rather than
    resolved here.
    """
    if variant == "verbatim":
        return 0.5 * scalar_structure_factor(x)
    if variant == "figure-consistent":
        return 0.5 * np.abs(real_correlation(x))
    raise ValueError(f"unknown discord variant {variant!r}; expected one of {DISCORD_VARIANTS}")


# Name -> vectorized function of the phase, in canonical column order.
# This is the quantifier vocabulary of the sweep/report interfaces.
QUANTIFIER_FUNCTIONS = {
    "S": scalar_structure_factor,
    "ReC": real_correlation,
    "witness": witness,
    "concurrence": concurrence,
    "eof": lambda x: entanglement_of_formation(concurrence(x)),
    "bell": bell_mean,
    "discord_verbatim": lambda x: geometric_discord(x, "verbatim"),
    "discord_figure": lambda x: geometric_discord(x, "figure-consistent"),
}


@dataclass(frozen=True)
class QuantifierReport:
    """All closed-form quantifiers evaluated at one scattering phase."""

    x: float
    S: float
    ReC: float
    witness: float
    concurrence: float
    eof: float
    bell: float
    discord_verbatim: float
    discord_figure: float

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def evaluate_quantifiers(x: float) -> QuantifierReport:
    conc = concurrence(x)
    return QuantifierReport(
        x=float(x),
        S=float(scalar_structure_factor(x)),
        ReC=float(real_correlation(x)),
        witness=float(witness(x)),
        concurrence=float(conc),
        eof=float(entanglement_of_formation(conc)),
        bell=float(bell_mean(x)),
        discord_verbatim=float(geometric_discord(x, "verbatim")),
        discord_figure=float(geometric_discord(x, "figure-consistent")),
    )


def bisect_root(f, lo: float, hi: float, ftol: float = 1e-12, max_iter: int = 200) -> float:
    """Bisection on a bracketing interval, run until |f| < ftol."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise ValueError("interval does not bracket a root")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if abs(fmid) < ftol:
            return mid
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return 0.5 * (lo + hi)


def scan_roots(f, lo: float = 0.0, hi: float = 2.0 * np.pi, samples: int = 10_000, ftol: float = 1e-12) -> list[float]:
    """All sign-change roots of f on [lo, hi], bracketed by a uniform scan
    and polished by bisection."""
    grid = np.linspace(lo, hi, samples)
    values = np.array([f(g) for g in grid])
    roots = []
    for k in np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]:
        roots.append(bisect_root(f, grid[k], grid[k + 1], ftol=ftol))
    return roots


def _window(f) -> tuple[float, float]:
    roots = scan_roots(f)
    if len(roots) != 2:
        raise RuntimeError(f"expected exactly 2 sign changes on [0, 2pi], found {len(roots)}")
    return roots[0], roots[1]


def witness_window() -> tuple[float, float]:
    """Phase interval on [0, 2 pi] where the witness is negative."""
    return _window(witness)


def concurrence_window() -> tuple[float, float]:
    """Phase interval on [0, 2 pi] where the concurrence is positive."""
    return _window(signed_concurrence)


def bell_violation_window() -> tuple[float, float]:
    """Phase interval on [0, 2 pi] where the Bell mean exceeds 2."""
    return _window(lambda x: bell_mean(x) - 2.0)
