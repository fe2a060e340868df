"""Deformed angular-momentum irrep matrices and their algebra checks.

For each spin j the ladder operators act inside the (2j+1)-dimensional
multiplet |j m> with matrix elements built from deformed numbers,

    <j,m+1| J+ |j,m> = sqrt([j-m][j+m+1]),

and J- is the transpose.  In the operating regime (space dimension much
larger than 2j+1) every bracket under a square root is nonnegative, so the
matrices are real.  The commutation relations and the invariant operator
are verified numerically against the stored matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qnum import QParameter, RegimeError, casimir_eigenvalue, qbracket, qbracket_classical

__all__ = ["IrrepMatrices", "build_irrep", "check_commutators", "check_casimir"]


@dataclass(frozen=True)
class IrrepMatrices:
    """Matrices of Jz and the ladder operators on one spin-j multiplet.

    Basis ordering is m = j..-j (descending), putting J+ on the first
    superdiagonal.  ``qp=None`` marks the undeformed (classical) variant.
    """

    j: float
    qp: QParameter | None
    jz: np.ndarray
    jplus: np.ndarray
    jminus: np.ndarray

    @property
    def m_values(self) -> np.ndarray:
        twoj = round(2 * self.j)
        return np.array([(twoj - 2 * k) / 2.0 for k in range(twoj + 1)])


def _bracket(qp: QParameter | None):
    if qp is None:
        return qbracket_classical
    return lambda x: qbracket(x, qp)


def build_irrep(j: float, qp: QParameter | None) -> IrrepMatrices:
    """Build the (2j+1)-dimensional irrep matrices at deformation qp.

    Raises RegimeError if any product [j-m][j+m+1] under a square root is
    negative, which signals that the embedding space is not large compared
    to the spin.
    """
    twoj = round(2 * j)
    if abs(2 * j - twoj) > 1e-9 or j < 0:
        raise ValueError(f"spin must be a nonnegative integer or half-integer, got {j}")
    dim = twoj + 1
    br = _bracket(qp)

    m = np.array([(twoj - 2 * k) / 2.0 for k in range(dim)])
    jz = np.diag(m)

    jplus = np.zeros((dim, dim))
    for k in range(1, dim):
        source = m[k]
        product = br(j - source) * br(j + source + 1.0)
        if product < 0.0:
            raise RegimeError(
                f"negative bracket product {product:.3e} at j={j}, m={source}"
                + ("" if qp is None else f", dim={qp.dim}")
                + "; the space is too small for this spin"
            )
        jplus[k - 1, k] = np.sqrt(product)

    return IrrepMatrices(j=float(j), qp=qp, jz=jz, jplus=jplus, jminus=jplus.T.copy())


def _maxabs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a)))


def check_commutators(irrep: IrrepMatrices) -> float:
    """Max-norm deviation over the deformed commutation relations.

    Checks [J+, J-] = [2 Jz] (bracket applied to the spectrum of 2 Jz) and
    [Jz, J+-] = +- J+-.
    """
    br = _bracket(irrep.qp)
    m = irrep.m_values
    target = np.diag([br(2.0 * mv) for mv in m])
    d1 = _maxabs(irrep.jplus @ irrep.jminus - irrep.jminus @ irrep.jplus - target)
    d2 = _maxabs(irrep.jz @ irrep.jplus - irrep.jplus @ irrep.jz - irrep.jplus)
    d3 = _maxabs(irrep.jz @ irrep.jminus - irrep.jminus @ irrep.jz + irrep.jminus)
    return max(d1, d2, d3)


def check_casimir(irrep: IrrepMatrices) -> float:
    """Max-norm deviation of [Jz][Jz+1] + J- J+ from [j][j+1] * identity."""
    br = _bracket(irrep.qp)
    m = irrep.m_values
    c2 = np.diag([br(mv) * br(mv + 1.0) for mv in m]) + irrep.jminus @ irrep.jplus
    ev = casimir_eigenvalue(irrep.j, irrep.qp)
    return _maxabs(c2 - ev * np.eye(len(m)))
