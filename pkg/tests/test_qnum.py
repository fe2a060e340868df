import dataclasses
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrotor.qnum import QParameter, casimir_eigenvalue, qbracket, qbracket_classical

DY_DIM = 189
YB_DIM = 231

odd_dims = st.integers(min_value=1, max_value=2000).map(lambda k: 2 * k + 1)


class TestQParameter:
    def test_from_dim(self):
        qp = QParameter.from_dim(DY_DIM)
        assert qp.dim == DY_DIM
        assert qp.tau == 2.0 * math.pi / DY_DIM
        assert qp.theta0 == 0.0

    def test_q_is_pure_phase(self):
        qp = QParameter.from_dim(DY_DIM)
        assert abs(abs(qp.q) - 1.0) < 1e-15
        assert qp.q.imag > 0

    @pytest.mark.parametrize("dim", [1, 2, 4, 0, -3, 188])
    def test_rejects_bad_dims(self, dim):
        with pytest.raises(ValueError):
            QParameter.from_dim(dim)

    def test_rejects_inconsistent_tau(self):
        with pytest.raises(ValueError, match="does not equal"):
            QParameter(tau=0.0332, dim=189)

    def test_frozen(self):
        qp = QParameter.from_dim(5)
        with pytest.raises(dataclasses.FrozenInstanceError):
            qp.tau = 1.0


class TestQBracket:
    @given(odd_dims)
    def test_anchors_exact(self, dim):
        qp = QParameter.from_dim(dim)
        assert qbracket(0.0, qp) == 0.0
        assert qbracket(1.0, qp) == 1.0

    def test_two_at_dy_dim(self):
        qp = QParameter.from_dim(DY_DIM)
        # independent route: sin(2t)/sin(t) = 2 cos(t)
        assert qbracket(2.0, qp) == pytest.approx(2.0 * math.cos(qp.tau), abs=1e-15)
        assert qbracket(2.0, qp) == pytest.approx(1.9988949138653513, abs=1e-12)

    @given(st.floats(min_value=-1e4, max_value=1e4), odd_dims)
    def test_antisymmetry(self, x, dim):
        qp = QParameter.from_dim(dim)
        assert qbracket(-x, qp) == pytest.approx(-qbracket(x, qp), abs=1e-12)

    def test_rejects_non_finite(self):
        qp = QParameter.from_dim(5)
        with pytest.raises(ValueError):
            qbracket(math.inf, qp)
        with pytest.raises(ValueError):
            qbracket(math.nan, qp)

    def test_positive_in_operating_regime(self):
        # space far larger than any spin: every [j] stays positive
        for dim in (DY_DIM, YB_DIM, 435, 1083):
            qp = QParameter.from_dim(dim)
            j = 0.5
            while qp.tau * (j + 1.0) < math.pi:
                assert qbracket(j, qp) > 0.0
                j += 0.5

    @pytest.mark.parametrize("x", [2.0, 4.0, 8.0])
    def test_classical_limit_monotone(self, x):
        errors = [abs(qbracket(x, QParameter.from_dim(d)) - x) for d in (101, 1001, 10001)]
        assert errors[0] > errors[1] > errors[2]
        assert errors[2] < 1e-4

    def test_classical_limit_tight_at_huge_dim(self):
        qp = QParameter.from_dim(1_000_001)
        assert abs(qbracket(4.0, qp) - 4.0) < 1e-9


class TestClassicalBracket:
    @pytest.mark.parametrize("x,expected", [(7.0, 7.0), (0.0, 0.0), (-3.5, -3.5)])
    def test_identity(self, x, expected):
        assert qbracket_classical(x) == expected

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            qbracket_classical(math.inf)


class TestCasimirEigenvalue:
    @given(odd_dims)
    def test_zero_spin(self, dim):
        assert casimir_eigenvalue(0.0, QParameter.from_dim(dim)) == 0.0

    def test_spin_one_at_dy_dim(self):
        qp = QParameter.from_dim(DY_DIM)
        assert casimir_eigenvalue(1.0, qp) == pytest.approx(1.9988949138653513, abs=1e-12)

    def test_spin_two_at_dy_dim(self):
        qp = QParameter.from_dim(DY_DIM)
        # independent route via a product-to-sum identity:
        # [2][3] = (cos t - cos 5t) / (2 sin^2 t)
        oracle = (math.cos(qp.tau) - math.cos(5 * qp.tau)) / (2 * math.sin(qp.tau) ** 2)
        assert casimir_eigenvalue(2.0, qp) == pytest.approx(oracle, rel=1e-13)
        assert casimir_eigenvalue(2.0, qp) == pytest.approx(5.987851378461507, abs=1e-12)

    def test_half_integer_spin_at_yb_dim(self):
        qp = QParameter.from_dim(YB_DIM)
        oracle = (math.cos(qp.tau) - math.cos(6 * qp.tau)) / (2 * math.sin(qp.tau) ** 2)
        assert casimir_eigenvalue(2.5, qp) == pytest.approx(oracle, rel=1e-13)
        assert casimir_eigenvalue(2.5, qp) == pytest.approx(8.732210809401014, abs=1e-12)

    def test_classical_variant(self):
        assert casimir_eigenvalue(2.0, None) == 6.0
        assert casimir_eigenvalue(7.5, None) == 7.5 * 8.5

    def test_rejects_negative_spin(self):
        with pytest.raises(ValueError):
            casimir_eigenvalue(-1.0, QParameter.from_dim(5))

    @settings(max_examples=50)
    @given(st.integers(min_value=1, max_value=30), odd_dims.filter(lambda d: d >= 101))
    def test_below_classical(self, j, dim):
        # the deformation compresses every multiplet above the trivial ones
        qp = QParameter.from_dim(dim)
        if qp.tau * (j + 1) < math.pi:
            assert casimir_eigenvalue(j, qp) <= j * (j + 1)
