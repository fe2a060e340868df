"""One-parameter least-squares fit of the inertia parameter A.

Theoretical level energies are linear in A once both sides are referenced
to the band head, so the least-squares optimum has the closed form
A* = sum(e*f)/sum(f*f) with e the referenced experimental energies and
f the referenced eigenvalue factors.  A brute-force grid scan with a
golden-section refinement serves as an independent cross-check of that
closed form.  Energies are handled in keV; following the reporting
convention, chi-squared is quoted in MeV^2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .model import BandData, q_parameter_from_band
from .qnum import QParameter, RegimeError, casimir_eigenvalue

__all__ = [
    "Variant",
    "FitError",
    "LevelResidual",
    "FitResult",
    "fit_A",
    "fit_A_oracle",
    "chi2_at",
    "compare",
]

KEV_PER_MEV = 1000.0


class Variant(enum.Enum):
    Q_DEFORMED = "q_deformed"
    CLASSICAL = "classical"


class FitError(ValueError):
    """The band admits no physical one-parameter fit."""


class LevelResidual(NamedTuple):
    j: float
    exp_kev: float
    theo_kev: float
    diff_kev: float


@dataclass(frozen=True)
class FitResult:
    """Fitted A with its goodness-of-fit numbers for one model variant.

    ``chi2`` is the sum of squared residuals in MeV^2, ``rms`` the
    root-mean-square deviation sqrt(chi2/N) in keV over the N fitted
    levels.  ``qp`` is None for the classical variant.
    """

    variant: Variant
    A: float
    chi2: float
    rms: float
    residuals: tuple[LevelResidual, ...]
    qp: QParameter | None


def _referenced(band: BandData, qp: QParameter | None):
    """Experimental energies and eigenvalue factors, both referenced to the
    band head so the model is strictly linear in A."""
    if qp is not None and qp.tau * (band.j_max + 1.0) >= math.pi:
        raise RegimeError(
            f"tau*(j_max+1) >= pi for band '{band.name}' at dim={qp.dim}"
        )
    energies = np.array(band.energies)
    factors = np.array([casimir_eigenvalue(j, qp) for j in band.spins])
    return energies - energies[0], factors - factors[0]


def chi2_at(band: BandData, qp: QParameter | None, A: float) -> float:
    """Least-squares objective at a given A, in MeV^2."""
    e, f = _referenced(band, qp)
    return float(np.sum(((e - A * f) / KEV_PER_MEV) ** 2))


def _result_at(band: BandData, qp: QParameter | None, A: float) -> FitResult:
    e, f = _referenced(band, qp)
    diffs = e - A * f
    chi2 = float(np.sum((diffs / KEV_PER_MEV) ** 2))
    rms = KEV_PER_MEV * math.sqrt(chi2 / len(band.levels))
    head = band.energies[0]
    residuals = tuple(
        LevelResidual(j=j, exp_kev=float(exp), theo_kev=float(head + A * fv), diff_kev=float(d))
        for j, exp, fv, d in zip(band.spins, band.energies, f, diffs)
    )
    variant = Variant.CLASSICAL if qp is None else Variant.Q_DEFORMED
    return FitResult(variant=variant, A=float(A), chi2=chi2, rms=rms, residuals=residuals, qp=qp)


def fit_A(band: BandData, qp: QParameter | None) -> FitResult:
    """Closed-form least-squares fit of A over the band's levels.

    Raises FitError if the eigenvalue factors have no spread or if the
    optimum lands at a nonpositive A (unphysical inertia).
    """
    e, f = _referenced(band, qp)
    sff = float(f @ f)
    if sff == 0.0:
        raise FitError(f"band '{band.name}' has no spread in the model term")
    A = float(e @ f) / sff
    if A <= 0.0:
        raise FitError(f"fitted A = {A:.4g} keV is not positive for band '{band.name}'")
    return _result_at(band, qp, A)


def fit_A_oracle(
    band: BandData,
    qp: QParameter | None,
    grid: tuple[float, float, int],
) -> FitResult:
    """Brute-force verifier of fit_A: exhaustive grid scan over A followed
    by a golden-section refinement inside the bracketing interval.

    ``grid`` is (A_lo, A_hi, n) with n >= 1000 subintervals.  Raises
    FitError if the scan minimum sits on the grid boundary, since the true
    optimum is then not bracketed.
    """
    a_lo, a_hi, n = grid
    if not a_lo < a_hi:
        raise ValueError(f"need A_lo < A_hi, got ({a_lo}, {a_hi})")
    if n < 1000:
        raise ValueError(f"need at least 1000 grid points, got {n}")
    e, f = _referenced(band, qp)

    a_grid = np.linspace(a_lo, a_hi, n + 1)
    chi2s = np.sum((e[None, :] - a_grid[:, None] * f[None, :]) ** 2, axis=1)
    k = int(np.argmin(chi2s))
    if k == 0 or k == n:
        raise FitError(f"objective minimum lies on the grid boundary near A={a_grid[k]:.4g}")

    def objective(a: float) -> float:
        return float(np.sum((e - a * f) ** 2))

    lo, hi = float(a_grid[k - 1]), float(a_grid[k + 1])
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = objective(c), objective(d)
    while hi - lo > 1e-12 * max(1.0, abs(a_grid[k])):
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = objective(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = objective(d)
    return _result_at(band, qp, 0.5 * (lo + hi))


def compare(band: BandData) -> tuple[FitResult, FitResult]:
    """Fit both variants: deformed with tau fixed by the band's spin
    content, and the undeformed j(j+1) baseline."""
    qp = q_parameter_from_band(band)
    return fit_A(band, qp), fit_A(band, None)
