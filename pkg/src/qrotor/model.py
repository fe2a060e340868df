"""The q-rotor model: space-size rule and band energy formula.

A rotational band fixes the deformation a priori: the embedding space must
be just large enough to contain the multiplets of every observed level,

    dim = sum over observed j of (2j+1),  bumped to the next odd number,

and tau = 2*pi/dim.  Level energies are then A*[j][j+1] with a single
inertia parameter A in keV.  Spins are stored internally as twice-spin
integers so half-integer bands need no fractional arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qnum import QParameter, RegimeError, casimir_eigenvalue

__all__ = [
    "BandError",
    "BandData",
    "twice_spin",
    "spin_str",
    "space_size",
    "q_parameter_from_band",
    "energy",
    "band_energies",
]


class BandError(ValueError):
    """A band violates the level-list invariants."""


def twice_spin(j: float) -> int:
    """Convert a decimal spin (integer or half-integer) to a twice-spin int."""
    twoj = round(2 * float(j))
    if abs(2 * float(j) - twoj) > 1e-9:
        raise ValueError(f"spin must be an integer or half-integer, got {j}")
    return int(twoj)


def spin_str(twoj: int) -> str:
    """Decimal text for a twice-spin integer: 4 -> '2', 15 -> '7.5'."""
    if twoj % 2 == 0:
        return str(twoj // 2)
    return f"{twoj / 2:.1f}"


@dataclass(frozen=True)
class BandData:
    """One named rotational band: ordered (twice-spin, energy keV) levels.

    Levels must be at least three, strictly increasing in both spin and
    energy, with a constant spin step (``twostep`` is twice the step).
    """

    name: str
    levels: tuple[tuple[int, float], ...]
    twostep: int

    def __post_init__(self):
        if not self.name:
            raise BandError("band needs a nonempty name")
        if len(self.levels) < 3:
            raise BandError(f"band needs at least 3 levels, got {len(self.levels)}")
        if self.twostep <= 0:
            raise BandError(f"spin step must be positive, got {self.twostep / 2}")
        spins = [twoj for twoj, _ in self.levels]
        energies = [e for _, e in self.levels]
        if spins[0] < 0:
            raise BandError(f"spins must be nonnegative, got {spins[0] / 2}")
        for a, b in zip(spins, spins[1:]):
            if b - a != self.twostep:
                raise BandError(
                    f"spin step between {spin_str(a)} and {spin_str(b)} is not {self.twostep / 2}"
                )
        if energies[0] < 0:
            raise BandError(f"lowest level energy must be >= 0, got {energies[0]}")
        for a, b in zip(energies, energies[1:]):
            if not (math.isfinite(b) and b > a):
                raise BandError("energies must be finite and strictly increasing with spin")

    @classmethod
    def from_levels(cls, name: str, levels, step: float | None = None) -> "BandData":
        """Build from (decimal spin, energy keV) pairs; step inferred if omitted."""
        enc = tuple((twice_spin(j), float(e)) for j, e in levels)
        if step is not None:
            twostep = twice_spin(step)
        elif len(enc) >= 2:
            twostep = enc[1][0] - enc[0][0]
        else:
            raise BandError("cannot infer spin step from fewer than 2 levels")
        return cls(name=name, levels=enc, twostep=twostep)

    @property
    def j_min(self) -> float:
        return self.levels[0][0] / 2.0

    @property
    def j_max(self) -> float:
        return self.levels[-1][0] / 2.0

    @property
    def step(self) -> float:
        return self.twostep / 2.0

    @property
    def spins(self) -> tuple[float, ...]:
        return tuple(twoj / 2.0 for twoj, _ in self.levels)

    @property
    def energies(self) -> tuple[float, ...]:
        return tuple(e for _, e in self.levels)


def space_size(j_min: float, j_max: float, step: float) -> int:
    """Odd embedding dimension from a spin range: sum of (2j+1), bumped by
    one if the sum comes out even."""
    a, b, s = twice_spin(j_min), twice_spin(j_max), twice_spin(step)
    if a < 0:
        raise ValueError(f"j_min must be nonnegative, got {j_min}")
    if s <= 0:
        raise ValueError(f"step must be positive, got {step}")
    if b < a or (b - a) % s != 0:
        raise ValueError(f"spin range {j_min}..{j_max} is not aligned with step {step}")
    total = sum(twoj + 1 for twoj in range(a, b + 1, s))
    if total % 2 == 0:
        total += 1
    return total


def q_parameter_from_band(band: BandData) -> QParameter:
    """Deformation parameter fixed by the band's own spin content."""
    dim = space_size(band.j_min, band.j_max, band.step)
    if dim < 5:
        raise BandError(f"embedding dimension {dim} from band '{band.name}' is too small")
    return QParameter.from_dim(dim)


def energy(j: float, A: float, qp: QParameter | None) -> float:
    """Level energy A*[j][j+1] in keV; undeformed A*j*(j+1) for ``qp=None``.

    Requires A > 0 and, in the deformed case, tau*(j+1) < pi so the band
    stays in the monotone regime.
    """
    if not (A > 0):
        raise ValueError(f"inertia parameter A must be positive, got {A}")
    if qp is not None and qp.tau * (j + 1.0) >= math.pi:
        raise RegimeError(
            f"tau*(j+1) = {qp.tau * (j + 1.0):.4f} >= pi at j={j}, dim={qp.dim}; "
            "energies would leave the monotone regime"
        )
    return A * casimir_eigenvalue(j, qp)


def band_energies(band: BandData, A: float, qp: QParameter | None) -> list[tuple[float, float]]:
    """Theoretical energies for each band spin, referenced to the lowest
    listed level (the band head defines the zero)."""
    head = energy(band.j_min, A, qp)
    return [(j, energy(j, A, qp) - head) for j in band.spins]
