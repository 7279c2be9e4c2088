"""Tests for pmf construction, validation, truncation and file parsing."""

import json
import math
from fractions import Fraction

import pytest

from config import settings
from errors import InputError, InvalidPmfError, ParameterError
from schemas.pmf import (
    BernoulliFamily, BinomialFamily, CustomFamily, GeometricFamily, Pmf, PoissonFamily, UniformFamily,
)
from services.pmf import (
    from_family, parse_family_spec, require_valid, shifted, validate, with_trailing_zeros,
)
from services.pmf_io import load_pmf_file, parse_pmf_text


class TestValidate:
    """Test the invariant report."""

    def test_valid_pmf(self):
        report = validate(Pmf(values=(0.5, 0.5)))
        assert report.valid
        assert [inv.name for inv in report.invariants] == ["nonnegative", "normalization", "tail_bound"]
        assert report.failures == []

    def test_negative_entry(self):
        report = validate(Pmf(values=(1.5, -0.5)))
        assert not report.valid
        assert [inv.name for inv in report.failures] == ["nonnegative"]
        assert report.failures[0].slack == -0.5

    def test_mass_too_small(self):
        report = validate(Pmf(values=(0.5, 0.4)))
        assert [inv.name for inv in report.failures] == ["normalization"]
        assert report.failures[0].slack == pytest.approx(-0.1)

    def test_mass_too_large(self):
        report = validate(Pmf(values=(0.6, 0.6)))
        assert not report.valid

    def test_tail_covers_missing_mass(self):
        p = Pmf(values=(0.5, 0.25), tail_mass_bound=0.25)
        assert validate(p, eps_tail=0.5).valid

    def test_tail_over_ceiling(self):
        p = Pmf(values=(0.5, 0.25), tail_mass_bound=0.25)
        report = validate(p)
        assert [inv.name for inv in report.failures] == ["tail_bound"]

    def test_pmf_ceiling_used(self):
        p = Pmf(values=(0.5, 0.25), tail_mass_bound=0.25, eps_tail=0.3)
        assert validate(p).valid

    def test_tolerance_accepts_rounding(self):
        assert validate(Pmf(values=(0.5, 0.5 + 1e-13))).valid

    def test_require_valid_raises(self):
        with pytest.raises(InvalidPmfError, match="normalization"):
            require_valid(Pmf(values=(0.5,)))

    def test_require_valid_returns_same(self):
        p = Pmf(values=(1.0,))
        assert require_valid(p) is p


class TestFromFamily:
    """Test family materialization."""

    def test_uniform(self):
        p = from_family(UniformFamily(n=4), eps_tail=1e-3)
        assert p.values == (0.25, 0.25, 0.25, 0.25)
        assert p.tail_mass_bound == 0.0

    def test_geometric_point_mass(self):
        p = from_family(GeometricFamily(q=1.0), eps_tail=1e-6)
        assert p.values == (1.0,)
        assert p.tail_mass_bound == 0.0

    @pytest.mark.parametrize("q", [0.05, 0.25, 0.5, 0.9])
    def test_geometric_partial_sum_closed_form(self, q):
        p = from_family(GeometricFamily(q=q))
        m = p.support_length
        assert math.fsum(p.values) == pytest.approx(1.0 - (1.0 - q) ** m, abs=1e-14)
        assert p.tail_mass_bound == pytest.approx((1.0 - q) ** m, rel=1e-12)
        assert p.tail_mass_bound <= settings.EPS_TAIL

    def test_geometric_second_moment_padding(self):
        q = 0.5
        p = from_family(GeometricFamily(q=q), eps_tail=1e-3)
        m = p.support_length
        r = 1.0 - q
        moment = r ** m * (m * m + 2 * m * r / q + r / q**2 + (r / q) ** 2)
        assert moment <= settings.SECOND_MOMENT_TAIL

    def test_poisson_mass(self):
        p = from_family(PoissonFamily(lam=1.0), eps_tail=1e-12)
        # independent partial sum in exact rationals of e^-1 / i!
        exact = sum(Fraction(1, math.factorial(i)) for i in range(p.support_length))
        assert math.fsum(p.values) == pytest.approx(float(exact) * math.exp(-1.0), abs=1e-14)
        assert abs(math.fsum(p.values) - 1.0) <= 1e-12
        assert p.tail_mass_bound <= 1e-12

    def test_poisson_large_rate(self):
        p = from_family(PoissonFamily(lam=200.0))
        assert p.support_length > 200
        assert validate(p).valid

    def test_bernoulli(self):
        assert from_family(BernoulliFamily(theta=0.3)).values == (0.7, 0.3)

    def test_binomial_matches_comb(self):
        p = from_family(BinomialFamily(n=10, theta=0.3))
        expected = [math.comb(10, k) * 0.3**k * 0.7 ** (10 - k) for k in range(11)]
        assert p.values == pytest.approx(expected, rel=1e-12)

    def test_binomial_degenerate(self):
        assert from_family(BinomialFamily(n=3, theta=1.0)).values == (0.0, 0.0, 0.0, 1.0)
        assert from_family(BinomialFamily(n=3, theta=0.0)).values == (1.0, 0.0, 0.0, 0.0)

    def test_custom_must_be_normalized(self):
        with pytest.raises(InvalidPmfError):
            from_family(CustomFamily(values=(0.5, 0.2)))

    def test_bad_eps(self):
        with pytest.raises(ParameterError):
            from_family(UniformFamily(n=2), eps_tail=0.0)

    def test_unreachable_eps(self, monkeypatch):
        monkeypatch.setattr(settings, "MAX_SUPPORT", 10)
        with pytest.raises(ParameterError, match="needs more than"):
            from_family(GeometricFamily(q=0.01))

    def test_origin_recorded(self):
        f = PoissonFamily(lam=2.5)
        assert from_family(f).origin == f


class TestParseFamilySpec:
    """Test name:param[,param] parsing."""

    def test_each_family(self):
        assert parse_family_spec("uniform:4") == UniformFamily(n=4)
        assert parse_family_spec("geometric:0.25") == GeometricFamily(q=0.25)
        assert parse_family_spec("poisson:2.5") == PoissonFamily(lam=2.5)
        assert parse_family_spec("bernoulli:0.3") == BernoulliFamily(theta=0.3)
        assert parse_family_spec("binomial:10,0.3") == BinomialFamily(n=10, theta=0.3)
        assert parse_family_spec("custom:0.5,0.5") == CustomFamily(values=(0.5, 0.5))

    def test_case_and_spaces(self):
        assert parse_family_spec(" Uniform: 3 ") == UniformFamily(n=3)

    @pytest.mark.parametrize("text", [
        "uniform", "uniform:", "uniform:x", "uniform:0", "geometric:2", "poisson:-1",
        "binomial:10", "normal:0,1", "uniform:1,2",
    ])
    def test_rejected(self, text):
        with pytest.raises(ParameterError):
            parse_family_spec(text)


class TestShifted:
    """Test the shift q(i) = p(i+1)."""

    def test_mass_plus_p0(self):
        p = Pmf(values=(0.1, 0.2, 0.3, 0.4))
        q = shifted(p)
        assert q.values == (0.2, 0.3, 0.4)
        assert abs(q.mass + p.p0 - math.fsum(p.values)) <= 1e-14

    def test_point_mass_shifts_to_empty(self):
        q = shifted(Pmf(values=(1.0,)))
        assert q.values == ()
        assert q.mass == 0.0

    def test_invalid_input(self):
        with pytest.raises(InvalidPmfError):
            shifted(Pmf(values=(0.3,)))


class TestTrailingZeros:
    """Test zero padding."""

    def test_pads(self):
        p = with_trailing_zeros(Pmf(values=(0.5, 0.5)), 3)
        assert p.values == (0.5, 0.5, 0.0, 0.0, 0.0)

    def test_negative_count(self):
        with pytest.raises(ParameterError):
            with_trailing_zeros(Pmf(values=(1.0,)), -1)


class TestPmfFiles:
    """Test pmf file parsing."""

    def test_json(self):
        p = parse_pmf_text(json.dumps({"values": [0.5, 0.5]}))
        assert p.values == (0.5, 0.5)
        assert p.tail_mass_bound == 0.0

    def test_json_with_tail(self):
        p = parse_pmf_text('{"values": [0.5, 0.25], "tail_mass_bound": 0.25}')
        assert p.tail_mass_bound == 0.25

    def test_lines_with_comments(self):
        p = parse_pmf_text("# geometric-ish\n0.5\n\n0.25\n0.25\n")
        assert p.values == (0.5, 0.25, 0.25)

    @pytest.mark.parametrize("text", [
        "",
        "# only a comment\n",
        "0.5\nabc\n",
        "0.5\n-0.1\n",
        "inf\n",
        '{"values": "nope"}',
        '{"values": [0.5, "x"]}',
        '{"values": [1.0], "tail_mass_bound": -1}',
        "{not json",
    ])
    def test_malformed(self, text):
        with pytest.raises(InputError):
            parse_pmf_text(text)

    def test_load_file(self, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text("0.25\n0.75\n", encoding="utf-8")
        assert load_pmf_file(path).values == (0.25, 0.75)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="Cannot read"):
            load_pmf_file(tmp_path / "absent.txt")

    def test_non_utf8_file(self, tmp_path):
        path = tmp_path / "p.txt"
        path.write_bytes(b"0.5\n\xff\xfe0.5\n")
        with pytest.raises(InputError, match="not UTF-8"):
            load_pmf_file(path)


FAMILIES = [
    UniformFamily(n=7),
    GeometricFamily(q=0.3),
    GeometricFamily(q=0.01),
    GeometricFamily(q=1.0),
    PoissonFamily(lam=2.5),
    PoissonFamily(lam=40.0),
    BernoulliFamily(theta=0.3),
    BinomialFamily(n=20, theta=0.4),
    CustomFamily(values=(0.2, 0.3, 0.5)),
]


class TestFamiliesValidate:
    """Every family materializes to a valid pmf at every tail ceiling."""

    @pytest.mark.parametrize("eps_tail", [1e-6, 1e-9, 1e-12])
    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.label)
    def test_passes_validate(self, family, eps_tail):
        p = from_family(family, eps_tail=eps_tail)
        assert validate(p).valid
        assert p.tail_mass_bound <= eps_tail


class TestSupportCeiling:
    """MAX_SUPPORT applies to finite families as well."""

    @pytest.mark.parametrize("family", [
        UniformFamily(n=11),
        BinomialFamily(n=10, theta=0.5),
        CustomFamily(values=(1.0,) + (0.0,) * 10),
    ], ids=lambda f: f.kind)
    def test_over_ceiling(self, monkeypatch, family):
        monkeypatch.setattr(settings, "MAX_SUPPORT", 10)
        with pytest.raises(ParameterError, match="has support 11"):
            from_family(family)

    def test_at_ceiling(self, monkeypatch):
        monkeypatch.setattr(settings, "MAX_SUPPORT", 10)
        assert from_family(UniformFamily(n=10)).support_length == 10
