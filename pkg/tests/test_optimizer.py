"""Tests for the simplex search and the brute-force grid scan."""

import pytest

from config import settings
from errors import PreconditionError
from schemas.pmf import Pmf
from services.pmf import validate
from services.quantities import max_pmf_ratio_values, stam_product_values
from analysis.optimizer import brute_force_grid, maximize_max_pmf_ratio, minimize_stam_product


@pytest.fixture(scope="module")
def support_chain():
    """Best N_d*I_d over supports 1, 2, 3, 4, 8, 16, each warm-started from the previous witness."""
    results = []
    previous = None
    for support in (1, 2, 3, 4, 8, 16):
        result = minimize_stam_product(support, restarts=8, seed=0, warm_start=previous)
        results.append(result)
        previous = result.witness
    return results


class TestMinimizeStamProduct:
    """Test the N_d*I_d search."""

    def test_support_one_is_four(self):
        result = minimize_stam_product(1, restarts=2)
        assert result.objective == 4.0
        assert result.witness.values == (1.0,)

    def test_support_two_matches_grid(self):
        result = minimize_stam_product(2, restarts=8, seed=0)
        grid = brute_force_grid(2, 1e-4)
        assert abs(result.objective - grid.objective) <= 1e-3

    def test_witness_recomputes(self, support_chain):
        for result in support_chain:
            assert validate(result.witness).valid
            recomputed = stam_product_values(result.witness.array)
            assert abs(recomputed - result.objective) <= 1e-10
            assert result.objective > 1.0

    def test_monotone_in_support(self, support_chain):
        objectives = [r.objective for r in support_chain]
        for smaller, larger in zip(objectives, objectives[1:]):
            assert larger <= smaller + 1e-6

    def test_support_sixteen_bracket(self):
        result = minimize_stam_product(16, restarts=32, seed=1)
        assert 1.0 < result.objective <= 4.0
        assert result.label == "conjecture data"
        assert result.restarts_used == 32
        assert result.converged

    def test_restart_records(self):
        result = minimize_stam_product(3, restarts=4, seed=2)
        assert [r.index for r in result.restarts] == [0, 1, 2, 3]
        assert result.restarts[0].start == "delta"
        assert all(r.start == "dirichlet" for r in result.restarts[1:])
        assert result.objective == min(r.objective for r in result.restarts)

    def test_deterministic(self):
        a = minimize_stam_product(4, restarts=4, seed=9)
        b = minimize_stam_product(4, restarts=4, seed=9)
        assert a == b

    def test_workers_do_not_change_result(self):
        serial = minimize_stam_product(4, restarts=4, seed=9, workers=1)
        parallel = minimize_stam_product(4, restarts=4, seed=9, workers=4)
        assert serial == parallel

    def test_restarts_converge_before_cap(self):
        result = minimize_stam_product(4, restarts=4, seed=3)
        assert all(r.converged for r in result.restarts)
        assert all(r.passes < settings.OPT_MAX_PASSES for r in result.restarts)

    def test_warm_start_counts_against_restarts(self):
        warm = Pmf(values=(0.5, 0.5))
        single = minimize_stam_product(3, restarts=1, warm_start=warm)
        assert single.restarts_used == 1
        assert [r.start for r in single.restarts] == ["warm"]
        three = minimize_stam_product(3, restarts=3, seed=0, warm_start=warm)
        assert [r.start for r in three.restarts] == ["warm", "delta", "dirichlet"]

    def test_warm_start_too_long(self, support_chain):
        with pytest.raises(PreconditionError):
            minimize_stam_product(2, warm_start=support_chain[-1].witness)

    @pytest.mark.parametrize("support, restarts", [(0, 1), (2, 0)])
    def test_bad_arguments(self, support, restarts):
        with pytest.raises(PreconditionError):
            minimize_stam_product(support, restarts=restarts)


class TestMaximizeMaxPmfRatio:
    """Test the max-pmf ratio search."""

    def test_below_one(self):
        result = maximize_max_pmf_ratio(4, restarts=4, seed=0)
        assert 0.0 < result.objective < 1.0
        assert result.objective_name == "max_pmf_ratio"
        assert result.objective == pytest.approx(max_pmf_ratio_values(result.witness.array), abs=1e-10)

    def test_records_report_ratio(self):
        result = maximize_max_pmf_ratio(3, restarts=3, seed=0)
        assert result.objective == max(r.objective for r in result.restarts)


class TestBruteForceGrid:
    """Test the lattice scan."""

    def test_support_two(self):
        result = brute_force_grid(2, 1e-3)
        assert result.objective > 1.0
        assert result.restarts[0].passes == 1001
        assert stam_product_values(result.witness.array) == result.objective

    def test_support_three_not_worse_than_two(self):
        two = brute_force_grid(2, 0.01)
        three = brute_force_grid(3, 0.01)
        # every support-2 lattice point is a support-3 lattice point with a trailing zero
        assert three.objective <= two.objective + 1e-12

    @pytest.mark.parametrize("support, step", [(4, 0.01), (2, 0.0), (2, 0.5)])
    def test_bad_arguments(self, support, step):
        with pytest.raises(PreconditionError):
            brute_force_grid(support, step)
