"""Finite angle / angular-momentum phase space as dense complex matrices.

An odd-dimensional space spanned by |m>, m = -l..l, carries a complete
orthonormal grid of angle states |theta_n>.  The exponentiated angle
operator is built here from its defining spectral sum over that grid, so
that its closed form (a one-step cyclic raising matrix) and the exchange
relation with the diagonal shift q^{Jz} can be verified against it
numerically rather than assumed.

Sign convention: this module uses the shift phase q = exp(-i*tau), the
natural one for the angle grid.  Energy formulas elsewhere use the real
bracket sin(tau*x)/sin(tau), which is insensitive to the sign of tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qnum import QParameter

__all__ = [
    "MAX_DENSE_DIM",
    "BPSpace",
    "build_space",
    "check_quantum_plane",
    "check_cyclic_shift",
    "check_unitarity",
    "check_angle_orthonormality",
    "check_angle_completeness",
    "check_angle_cycling",
    "check_lowering",
    "check_shift_power",
]

# Dense-matrix cap; verification runs at small dimensions and real bands
# stay near 10^3, so dense storage is always tractable.
MAX_DENSE_DIM = 1001


@dataclass(frozen=True)
class BPSpace:
    """Dense matrix realization of the finite angle phase space.

    Basis ordering is m = -l..l (ascending).  ``angle_basis[n]`` holds the
    components of the n-th angle state over that basis; ``exp_iphi`` is the
    exponentiated angle operator and ``q_jz`` the diagonal shift q^{Jz}.
    """

    qp: QParameter
    dim: int
    exp_iphi: np.ndarray
    q_jz: np.ndarray
    angle_basis: np.ndarray

    @property
    def m_values(self) -> np.ndarray:
        l = (self.dim - 1) // 2
        return np.arange(-l, l + 1, dtype=float)

    @property
    def theta_values(self) -> np.ndarray:
        return self.qp.theta0 + 2.0 * math.pi * np.arange(self.dim) / self.dim


def build_space(l: float, theta0: float = 0.0, max_dim: int = MAX_DENSE_DIM) -> BPSpace:
    """Construct the (2l+1)-dimensional space with its operator matrices.

    The angle states are |theta_n> with components exp(-i*m*theta_n)/sqrt(D)
    and theta_n = theta0 + 2*pi*n/D.  The exponentiated angle operator is
    assembled from its spectral sum over these states; q^{Jz} is diagonal
    with entries exp(-i*m*2*pi/D).

    Raises ValueError for l off the half-integer grid or 2l+1 < 3; an even
    2l+1 (half-integer l) is rejected by the parameter's oddness invariant.
    """
    twol = round(2 * l)
    if abs(2 * l - twol) > 1e-9:
        raise ValueError(f"l must be an integer or half-integer, got {l}")
    dim = twol + 1
    if dim < 3:
        raise ValueError(f"need 2l+1 >= 3, got 2l+1 = {dim}")
    if dim > max_dim:
        raise ValueError(f"2l+1 = {dim} exceeds the dense-matrix cap {max_dim}")
    qp = QParameter.from_dim(dim, theta0)

    lint = (dim - 1) // 2
    m = np.arange(-lint, lint + 1, dtype=float)
    theta = theta0 + 2.0 * math.pi * np.arange(dim) / dim

    angle_basis = np.exp(-1j * np.outer(theta, m)) / math.sqrt(dim)

    # exp(i*Phi) = sum_n exp(i*theta_n) |theta_n><theta_n|
    exp_iphi = (angle_basis.T * np.exp(1j * theta)) @ angle_basis.conj()

    q_jz = np.diag(np.exp(-1j * qp.tau * m))

    return BPSpace(qp=qp, dim=dim, exp_iphi=exp_iphi, q_jz=q_jz, angle_basis=angle_basis)


def _maxabs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a)))


def check_quantum_plane(space: BPSpace) -> float:
    """Max-norm deviation of q^{Jz} e^{iPhi} - q e^{iPhi} q^{Jz} from zero."""
    q = np.exp(-1j * space.qp.tau)
    qd = np.diagonal(space.q_jz)
    lhs = qd[:, None] * space.exp_iphi
    rhs = q * (space.exp_iphi * qd[None, :])
    return _maxabs(lhs - rhs)


def _cyclic_raising(dim: int, theta0: float) -> np.ndarray:
    """One-step cyclic raising matrix in the |m> basis with the wrap-around
    corner phase exp(i*D*theta0)."""
    ref = np.zeros((dim, dim), dtype=complex)
    ref[np.arange(1, dim), np.arange(dim - 1)] = 1.0
    ref[0, dim - 1] = np.exp(1j * dim * theta0)
    return ref


def check_cyclic_shift(space: BPSpace) -> float:
    """Max-norm deviation of exp_iphi from the cyclic raising matrix."""
    return _maxabs(space.exp_iphi - _cyclic_raising(space.dim, space.qp.theta0))


def check_unitarity(space: BPSpace) -> float:
    """Max-norm deviation of U U^dagger from identity for both operators."""
    eye = np.eye(space.dim)
    d1 = _maxabs(space.exp_iphi @ space.exp_iphi.conj().T - eye)
    d2 = _maxabs(space.q_jz @ space.q_jz.conj().T - eye)
    return max(d1, d2)


def check_angle_orthonormality(space: BPSpace) -> float:
    """Max-norm deviation of the angle-state Gram matrix from identity."""
    gram = space.angle_basis @ space.angle_basis.conj().T
    return _maxabs(gram - np.eye(space.dim))


def check_angle_completeness(space: BPSpace) -> float:
    """Max-norm deviation of sum_n |theta_n><theta_n| from identity."""
    proj = space.angle_basis.T @ space.angle_basis.conj()
    return _maxabs(proj - np.eye(space.dim))


def check_angle_cycling(space: BPSpace) -> float:
    """q^{Jz} permutes angle states cyclically: |theta_n> -> |theta_{n+1}>.

    Returns the max-norm deviation of the shifted basis from the rolled one;
    for integer m the wrap-around is phase-free.
    """
    qd = np.diagonal(space.q_jz)
    shifted = space.angle_basis * qd[None, :]
    return _maxabs(shifted - np.roll(space.angle_basis, -1, axis=0))


def check_lowering(space: BPSpace) -> float:
    """The adjoint exp(-i*Phi) lowers m by one (cyclically)."""
    ref = _cyclic_raising(space.dim, space.qp.theta0)
    return _maxabs(space.exp_iphi.conj().T - ref.conj().T)


def check_shift_power(space: BPSpace) -> float:
    """(exp_iphi)^D equals exp(i*D*theta0) times identity."""
    powered = np.linalg.matrix_power(space.exp_iphi, space.dim)
    target = np.exp(1j * space.dim * space.qp.theta0) * np.eye(space.dim)
    return _maxabs(powered - target)
