"""Scalar q-number arithmetic for a pure-phase deformation parameter.

The deformed number [x] = sin(tau*x)/sin(tau) is real for q = exp(i*tau)
on the unit circle and reduces to the ordinary number x as tau -> 0.
Everything here is a pure function of immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "QParameter",
    "RegimeError",
    "qbracket",
    "qbracket_classical",
    "casimir_eigenvalue",
]


class RegimeError(ValueError):
    """Parameters left the regime where the model is defined (large space,
    small spin), e.g. a bracket under a square root went negative."""


def _check_dim(dim) -> None:
    if dim != int(dim) or dim < 3 or dim % 2 == 0:
        raise ValueError(f"space dimension must be an odd integer >= 3, got {dim}")


@dataclass(frozen=True)
class QParameter:
    """Deformation parameter tau = 2*pi/dim derived from an odd space dimension.

    tau is stored redundantly next to the dimension it derives from; the
    relation is checked on construction.  theta0 is the reference angle of
    the discrete angle grid and never enters band energies.
    """

    tau: float
    dim: int
    theta0: float = 0.0

    def __post_init__(self):
        _check_dim(self.dim)
        if self.tau != 2.0 * math.pi / self.dim:
            raise ValueError(f"tau={self.tau!r} does not equal 2*pi/{self.dim}")
        if not math.isfinite(self.theta0):
            raise ValueError(f"theta0 must be finite, got {self.theta0}")

    @classmethod
    def from_dim(cls, dim: int, theta0: float = 0.0) -> "QParameter":
        """Build the parameter for a given odd space dimension."""
        _check_dim(dim)
        return cls(tau=2.0 * math.pi / dim, dim=int(dim), theta0=theta0)

    @property
    def q(self) -> complex:
        """The pure-phase deformation q = exp(i*tau)."""
        return complex(math.cos(self.tau), math.sin(self.tau))


def qbracket(x: float, qp: QParameter) -> float:
    """Deformed number [x] = sin(tau*x)/sin(tau).

    Exact at the anchors: [0] = 0 and [1] = 1.  Antisymmetric in x.
    Accepts any finite real x so the same routine serves operator spectra
    (arguments 2m) and energy eigenvalues (arguments j, j+1).
    """
    if not math.isfinite(x):
        raise ValueError(f"bracket argument must be finite, got {x}")
    return math.sin(qp.tau * x) / math.sin(qp.tau)


def qbracket_classical(x: float) -> float:
    """tau -> 0 limit of the deformed number: the identity map."""
    if not math.isfinite(x):
        raise ValueError(f"bracket argument must be finite, got {x}")
    return float(x)


def casimir_eigenvalue(j: float, qp: QParameter | None) -> float:
    """Invariant-operator eigenvalue [j][j+1] on the spin-j multiplet.

    With ``qp=None`` returns the undeformed j*(j+1).
    """
    if not (j >= 0):
        raise ValueError(f"spin must be nonnegative, got {j}")
    if qp is None:
        return j * (j + 1.0)
    return qbracket(j, qp) * qbracket(j + 1.0, qp)
