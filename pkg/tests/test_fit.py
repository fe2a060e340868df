import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _synth import exact_band, noisy_band, random_band, spin_range
from qrotor.fit import FitError, Variant, chi2_at, compare, fit_A, fit_A_oracle
from qrotor.ingest import read_band_file
from qrotor.model import BandData, q_parameter_from_band
from qrotor.qnum import QParameter, casimir_eigenvalue

DY = QParameter.from_dim(189)
SPINS_2_18 = spin_range(2.0, 2.0, 9)


class TestClosedForm:
    def test_exact_model_recovery(self):
        band = exact_band("exact", 12.81, DY, SPINS_2_18)
        result = fit_A(band, DY)
        assert result.variant is Variant.Q_DEFORMED
        assert abs(result.A - 12.81) / 12.81 < 1e-9
        assert result.chi2 < 1e-15
        assert result.qp is DY

    def test_exact_classical_recovery(self):
        band = exact_band("classical", 10.0, None, SPINS_2_18)
        result = fit_A(band, None)
        assert result.variant is Variant.CLASSICAL
        assert result.A == pytest.approx(10.0, rel=1e-12)
        assert result.chi2 < 1e-15
        assert result.qp is None

    def test_rms_definition(self):
        rng = np.random.default_rng(7)
        band = noisy_band("noisy", 12.0, DY, SPINS_2_18, 20.0, rng)
        result = fit_A(band, DY)
        assert result.rms == pytest.approx(1000.0 * math.sqrt(result.chi2 / 9), rel=1e-12)

    def test_chi2_decomposition(self):
        rng = np.random.default_rng(11)
        band = noisy_band("noisy", 8.0, DY, SPINS_2_18, 35.0, rng)
        result = fit_A(band, DY)
        recomputed = sum((r.diff_kev / 1000.0) ** 2 for r in result.residuals)
        assert result.chi2 == pytest.approx(recomputed, rel=1e-9)
        # residual = exp - theo, with theo anchored at the band head
        for r in result.residuals:
            assert r.diff_kev == pytest.approx(r.exp_kev - r.theo_kev, abs=1e-9)
        assert result.residuals[0].theo_kev == pytest.approx(band.energies[0], abs=1e-12)

    def test_gradient_vanishes_at_optimum(self):
        rng = np.random.default_rng(3)
        band = noisy_band("noisy", 15.0, DY, SPINS_2_18, 40.0, rng)
        result = fit_A(band, DY)
        h = 1e-5 * result.A
        fd = (chi2_at(band, DY, result.A + h) - chi2_at(band, DY, result.A - h)) / (2 * h)
        factors = np.array([casimir_eigenvalue(j, DY) for j in band.spins])
        f = factors - factors[0]
        slope_scale = 2.0 * float(f @ f) * result.A / 1e6
        assert abs(fd) <= 1e-8 * slope_scale

    def test_convexity_at_optimum(self):
        rng = np.random.default_rng(5)
        band = noisy_band("noisy", 9.0, DY, SPINS_2_18, 25.0, rng)
        result = fit_A(band, DY)
        delta = 0.01 * result.A
        assert chi2_at(band, DY, result.A + delta) > result.chi2
        assert chi2_at(band, DY, result.A - delta) > result.chi2

    @settings(max_examples=30, deadline=None)
    @given(st.floats(min_value=0.1, max_value=10.0))
    def test_scale_equivariance(self, c):
        rng = np.random.default_rng(17)
        band = noisy_band("noisy", 12.0, DY, SPINS_2_18, 30.0, rng)
        scaled = BandData.from_levels("scaled", [(j, c * e) for j, e in zip(band.spins, band.energies)])
        base = fit_A(band, DY)
        result = fit_A(scaled, DY)
        assert result.A == pytest.approx(c * base.A, rel=1e-12)
        assert result.chi2 == pytest.approx(c * c * base.chi2, rel=1e-9, abs=1e-25)


class TestOracle:
    def test_exact_band_agreement(self):
        band = exact_band("exact", 12.81, DY, SPINS_2_18)
        oracle = fit_A_oracle(band, DY, (1.0, 30.0, 2000))
        assert abs(oracle.A - 12.81) < (30.0 - 1.0) / 2000

    def test_noisy_band_agreement(self):
        rng = np.random.default_rng(23)
        band = noisy_band("noisy", 6.5, DY, SPINS_2_18, 45.0, rng)
        closed = fit_A(band, DY)
        oracle = fit_A_oracle(band, DY, (1.0, 30.0, 2000))
        assert abs(oracle.A - closed.A) < 2 * (30.0 - 1.0) / 2000

    def test_boundary_minimum_rejected(self):
        band = exact_band("exact", 12.81, DY, SPINS_2_18)
        with pytest.raises(FitError, match="boundary"):
            fit_A_oracle(band, DY, (20.0, 40.0, 2000))

    def test_grid_validation(self):
        band = exact_band("exact", 12.81, DY, SPINS_2_18)
        with pytest.raises(ValueError, match="grid"):
            fit_A_oracle(band, DY, (1.0, 30.0, 100))
        with pytest.raises(ValueError, match="A_lo"):
            fit_A_oracle(band, DY, (30.0, 1.0, 2000))


class TestCompare:
    def test_q_generated_band(self):
        band = exact_band("exact", 12.81, DY, spin_range(2.0, 2.0, 9))
        fit_q, fit_cl = compare(band)
        assert fit_q.variant is Variant.Q_DEFORMED
        assert fit_cl.variant is Variant.CLASSICAL
        assert fit_q.chi2 < 1e-12
        assert fit_q.chi2 < fit_cl.chi2

    def test_classically_generated_band(self):
        band = exact_band("classical", 10.0, None, spin_range(2.0, 2.0, 9))
        fit_q, fit_cl = compare(band)
        assert fit_cl.chi2 < 1e-20
        assert fit_cl.chi2 <= fit_q.chi2

    @pytest.mark.parametrize("count,seed", [(9, 1), (10, 2), (14, 3)])
    def test_compressed_bands_favor_deformation(self, count, seed):
        # generate from the tau the spin-content rule itself assigns, so the
        # band carries exactly the compression the deformed fit models
        spins = spin_range(2.0, 2.0, count)
        shape = BandData.from_levels("shape", [(j, 1.0 + j) for j in spins])
        qp = q_parameter_from_band(shape)
        rng = np.random.default_rng(seed)
        band = noisy_band("compressed", 9.0, qp, spins, 2.0, rng)
        fit_q, fit_cl = compare(band)
        assert fit_q.chi2 <= fit_cl.chi2

    def test_u238_demo_band(self, bands_dir):
        band = read_band_file(bands_dir / "u238.band").parsed
        fit_q, fit_cl = compare(band)
        # strongly compressed band: deformed fit wins by a wide margin
        assert fit_q.chi2 < 0.75 * fit_cl.chi2
        assert 150.0 <= 1e3 * fit_cl.chi2 <= 400.0


class TestRandomBandSweep:
    def test_closed_form_matches_oracle(self):
        rng = np.random.default_rng(2024)
        for tag in range(100):
            band, qp, a0, sigma = random_band(rng, tag)
            closed = fit_A(band, qp)
            est = (band.energies[-1] - band.energies[0]) / (
                casimir_eigenvalue(band.j_max, qp) - casimir_eigenvalue(band.j_min, qp)
            )
            lo, hi, n = 0.2 * est, 5.0 * est, 2000
            oracle = fit_A_oracle(band, qp, (lo, hi, n))
            assert abs(closed.A - oracle.A) < (hi - lo) / n
