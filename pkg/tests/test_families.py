"""Tests for closed-form family oracles against the numeric quantities."""

import math

import pytest

from errors import ParameterError
from schemas.pmf import BinomialFamily, GeometricFamily, PoissonFamily, UniformFamily
from services.families import (
    compare_with_oracle, geometric_log_entropy_power, geometric_oracle, oracle_for, poisson_oracle,
    uniform_oracle,
)
from services.pmf import from_family
from services.quantities import dfi_direct, quantity_report

FAMILY_GRID = (
    [UniformFamily(n=n) for n in (1, 2, 5, 10, 100)]
    + [GeometricFamily(q=q) for q in (0.01, 0.1, 0.5, 0.9, 1.0)]
    + [PoissonFamily(lam=lam) for lam in (0.1, 1.0, 2.5, 10.0)]
)


class TestUniformOracle:
    """Test uniform closed forms."""

    def test_values(self):
        oracle = uniform_oracle(4)
        assert oracle.dfi == 1.0
        assert oracle.entropy_power == 16.0
        assert oracle.mean == 1.5
        assert oracle.max_pmf == 0.25

    def test_bad_n(self):
        with pytest.raises(ParameterError):
            uniform_oracle(0)


class TestGeometricOracle:
    """Test geometric closed forms."""

    def test_point_mass(self):
        oracle = geometric_oracle(1.0)
        assert oracle.dfi == 4.0
        assert oracle.entropy_power == 1.0
        assert oracle.variance == 0.0

    def test_half(self):
        oracle = geometric_oracle(0.5)
        assert oracle.dfi == pytest.approx(4.0 * (1.0 - math.sqrt(0.5)) ** 2, rel=1e-15)
        # H = (-q log q - (1-q) log(1-q)) / q = 2 log 2 at q = 1/2
        assert oracle.entropy == pytest.approx(2.0 * math.log(2.0), rel=1e-15)

    def test_small_q_stable(self):
        q = 1e-8
        oracle = geometric_oracle(q)
        assert oracle.dfi == pytest.approx(q * q, rel=1e-7)
        assert math.isfinite(oracle.entropy_power)

    def test_log_entropy_power_limit(self):
        assert geometric_log_entropy_power(1.0) == 0.0
        assert geometric_log_entropy_power(1.0 - 1e-12) == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("q", [0.0, -0.1, 1.5])
    def test_out_of_range(self, q):
        with pytest.raises(ParameterError):
            geometric_oracle(q)


class TestPoissonOracle:
    """Test Poisson series."""

    def test_moments(self):
        oracle = poisson_oracle(1.0)
        assert oracle.mean == 1.0
        assert oracle.variance == 1.0

    def test_max_at_floor(self):
        oracle = poisson_oracle(2.5)
        assert oracle.max_pmf == pytest.approx(math.exp(-2.5) * 2.5**2 / 2.0, rel=1e-14)

    def test_integer_rate_tie(self):
        p = from_family(PoissonFamily(lam=3.0))
        report = quantity_report(p)
        # p(2) = p(3); compare values, the index may be either
        assert report.max_pmf == pytest.approx(poisson_oracle(3.0).max_pmf, rel=1e-14)
        assert report.argmax in (2, 3)

    def test_series_matches_direct(self):
        oracle = poisson_oracle(1.0, 1e-12)
        direct, _ = dfi_direct(from_family(PoissonFamily(lam=1.0), eps_tail=1e-12))
        assert abs(oracle.dfi - direct) <= 1e-9

    @pytest.mark.parametrize("lam", [0.0, -1.0, float("inf")])
    def test_bad_rate(self, lam):
        with pytest.raises(ParameterError):
            poisson_oracle(lam)


class TestOracleAgreement:
    """Numeric quantities on materialized families match closed forms."""

    @pytest.mark.parametrize("family", FAMILY_GRID, ids=lambda f: f.label)
    def test_every_field(self, family):
        p = from_family(family)
        report = quantity_report(p)
        oracle = oracle_for(family)
        for row in compare_with_oracle(report, oracle):
            budget = 1e-9
            if row.field == "dfi":
                budget += report.error_bound_dfi
            elif row.field == "entropy":
                budget += report.error_bound_entropy
            elif row.field in ("mean", "variance", "entropy_power"):
                budget *= max(1.0, abs(row.oracle))
            assert abs(row.difference) <= budget, row

    def test_no_oracle_for_binomial(self):
        assert oracle_for(BinomialFamily(n=4, theta=0.5)) is None
        assert oracle_for(None) is None

    def test_comparison_fields(self):
        report = quantity_report(from_family(UniformFamily(n=3)))
        fields = [row.field for row in compare_with_oracle(report, uniform_oracle(3))]
        assert fields == ["dfi", "mean", "variance", "max_pmf", "entropy", "entropy_power"]
