import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entbounds.bounds import (
    BoundParams,
    Grouping,
    InfeasibleParamsError,
    chain_bound,
    chain_values,
    full_grouping,
    lemma_chain_grid,
    lemma_rhs,
    monogamy_lower_AB,
    multi_partition_polygamy,
    negativity_bounds_AB,
    pair_measures_sq,
    polygamy_bound_coa,
    polygamy_upper_AB,
    theta,
    tripartite_bounds,
)
from entbounds.measures import Bipartition, pure_concurrence
from entbounds.states import PureState, haar_random_pure
from entbounds.linalg import qubit_shape

P_EXAMPLE2 = {"A": (4 / 5, 3 / 5), "B": (2 / 5, 3 / 5)}


class TestLemma:
    def test_equality_at_x_one(self):
        c = lemma_rhs(0.5, 0.6, 1.0)
        assert abs(c.rhs - 1.5) < 1e-15

    def test_t_zero(self):
        assert abs(lemma_rhs(0.0, 0.3, 0.5).rhs - 1.0) < 1e-15

    def test_half_point_value(self):
        # direct evaluation: Omega = 1 + .25/2.56, Upsilon from the display
        c = lemma_rhs(0.5, 0.6, 0.5)
        omega = 1 + 0.5 * 0.5 / 1.6 ** 2
        upsilon = (1.6 ** 0.5 - 1) / 0.6 ** 0.5 - 0.5 * 0.6 / (1.6 ** 2 * 0.6 ** 0.5)
        assert abs(c.omega - omega) < 1e-15
        assert abs(c.upsilon - upsilon) < 1e-15
        assert abs(c.rhs - 1.23251) < 5e-6
        assert c.rhs >= 1.5 ** 0.5

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            lemma_rhs(0.7, 0.6, 0.5)  # t > p
        with pytest.raises(ValueError):
            lemma_rhs(0.5, 1.2, 0.5)  # p > 1
        with pytest.raises(ValueError):
            lemma_rhs(0.5, 0.0, 0.5)  # p = 0
        with pytest.raises(ValueError):
            lemma_rhs(0.5, 0.6, 1.5)  # x > 1

    @settings(max_examples=300, deadline=None)
    @given(st.floats(0.0, 1.0), st.floats(1e-9, 1.0), st.floats(0.0, 1.0))
    def test_inequality_everywhere(self, frac, p, x):
        t = frac * p
        assert lemma_rhs(t, p, x).rhs >= (1 + t) ** x - 1e-12

    @settings(max_examples=200, deadline=None)
    @given(st.floats(0.0, 1.0), st.floats(1e-6, 1.0), st.floats(0.0, 1.0),
           st.floats(0.0, 1.0))
    def test_monotone_in_p(self, frac, p1, scale, x):
        # tighter bound at smaller admissible p
        p2 = p1 + (1.0 - p1) * scale
        t = frac * p1
        assert lemma_rhs(t, p1, x).rhs <= lemma_rhs(t, p2, x).rhs + 1e-12


class TestChain:
    def test_collapse_at_t_p_x_one(self):
        npt.assert_allclose(chain_values(1.0, 1.0, 1.0), [2.0] * 6, atol=1e-15)

    def test_x_zero_convention(self):
        npt.assert_allclose(chain_values(0.5, 0.6, 0.0),
                            [1.0, 1.0, 1.0, 1.0, 1.0, 2.0], atol=1e-15)

    def test_nondecreasing_on_grid(self):
        grid = lemma_chain_grid(20_000, seed=77)
        assert np.min(np.diff(grid, axis=1)) > -1e-12

    def test_grid_deterministic(self):
        npt.assert_array_equal(lemma_chain_grid(100, seed=3, stream=9),
                               lemma_chain_grid(100, seed=3, stream=9))


class TestTheta:
    def test_example1_hand_check(self):
        # (1 + 50/256) * 1/2 + (39/64) * 1/4 = 3/4 at exponent 2, p = 3/5
        params = BoundParams(exponent=2.0, p=(0.6,), feasible=(True,))
        res = theta([[0.5], [0.25]], params)
        assert abs(res.value - 0.75) < 1e-15
        omega, upsilon, head = res.per_level[0]
        assert abs(omega - (1 + 50 / 256)) < 1e-15
        assert abs(upsilon - 39 / 64) < 1e-15
        assert head == 0.5

    def test_example2_focus_b(self):
        heads = [[36 / 64], [8 / 64], [4 / 64]]
        params = BoundParams(exponent=2.0, p=(2 / 5, 3 / 5),
                             feasible=(True, True))
        assert abs(theta(heads, params).value - 0.75) < 1e-14

    def test_k1_any_exponent(self):
        for expo in (0.0, 0.7, 1.3, 2.0):
            params = BoundParams(exponent=expo)
            res = theta([[0.3, 0.2, 0.1]], params)
            expected = 1.0 if expo == 0.0 else 0.6 ** (expo / 2)
            assert abs(res.value - expected) < 1e-15

    def test_equality_at_exponent_two(self):
        gen = np.random.default_rng(61)
        for _ in range(100):
            vals = np.sort(gen.uniform(0.05, 1.0, size=4))[::-1]
            groups = [[v] for v in vals]
            ts = [vals[i + 1:].sum() / vals[i] for i in range(3)]
            if any(t > 1 for t in ts):
                continue
            p = tuple(min(1.0, t + (1 - t) * gen.uniform()) for t in ts)
            params = BoundParams(exponent=2.0, p=p, feasible=(True,) * 3)
            assert abs(theta(groups, params).value - vals.sum()) < 1e-12

    def test_infeasible_reports_level_and_min_p(self):
        params = BoundParams(exponent=1.0, p=(0.3,), feasible=(False,))
        with pytest.raises(InfeasibleParamsError) as exc:
            theta([[0.5], [0.25]], params)
        assert exc.value.level == 1
        assert abs(exc.value.min_p - 0.5) < 1e-15

    def test_interior_zero_rejected(self):
        params = BoundParams(exponent=1.0, p=(0.5, 0.5),
                             feasible=(True, True))
        with pytest.raises(ValueError, match="reorder"):
            theta([[0.5], [0.0], [0.25]], params)

    def test_trailing_zero_dropped(self):
        params = BoundParams(exponent=1.0, p=(0.5,), feasible=(True,))
        with_zero = theta([[0.5], [0.25], [0.0]], params)
        without = theta([[0.5], [0.25]], params)
        assert with_zero.value == without.value

    def test_all_zero_groups(self):
        assert theta([[0.0], [0.0]], BoundParams(exponent=1.0)).value == 0.0
        assert theta([[0.0], [0.0]], BoundParams(exponent=0.0)).value == 1.0


class TestPolygamyBoundCoa:
    def test_beta_two_equality(self, example1_state):
        rep = polygamy_bound_coa(example1_state, "A", 2.0, p=(0.6,))
        assert abs(rep.ours - 0.75) < 1e-12
        assert abs(rep.comparators["p1_specialization"] - 0.75) < 1e-12
        assert abs(rep.lhs - 0.75) < 1e-12

    def test_beta_zero_convention(self, example1_state):
        rep = polygamy_bound_coa(example1_state, "A", 0.0, p=(0.6,))
        assert rep.lhs == 1.0
        assert abs(rep.ours - 1.0) < 1e-15
        assert abs(rep.comparators["trivial_sum"] - 2.0) < 1e-15

    def test_figure_ordering_pointwise(self, example1_state):
        for beta in np.linspace(0.0, 2.0, 41):
            rep = polygamy_bound_coa(example1_state, "A", float(beta),
                                     p=(0.6,))
            seq = [rep.lhs, rep.ours, rep.comparators["p1_specialization"],
                   rep.comparators["pow2_chain"],
                   rep.comparators["beta_half_chain"],
                   rep.comparators["trivial_sum"]]
            assert np.min(np.diff(seq)) > -1e-9

    def test_explicit_infeasible_p_raises(self, example1_state):
        with pytest.raises(InfeasibleParamsError) as exc:
            polygamy_bound_coa(example1_state, "A", 1.0, p=(0.3,))
        assert abs(exc.value.min_p - 0.5) < 1e-12


class TestABCutBounds:
    def test_example2_alpha_two(self, example2_state):
        lo = monogamy_lower_AB(example2_state, 2.0, p=P_EXAMPLE2)
        up = polygamy_upper_AB(example2_state, 2.0, p=P_EXAMPLE2)
        assert abs(lo.ours - 15 / 64) < 1e-12
        assert abs(lo.lhs - 39 / 64) < 1e-12
        assert abs(up.ours - 111 / 64) < 1e-12

    def test_alpha_zero(self, example2_state):
        lo = monogamy_lower_AB(example2_state, 0.0, p=P_EXAMPLE2)
        assert lo.lhs == 1.0
        assert lo.ours <= 1e-15  # both arms are 1 - theta(0) = 0

    def test_lower_chain_ordering(self, example2_state):
        for alpha in np.linspace(0.0, 2.0, 41):
            rep = monogamy_lower_AB(example2_state, float(alpha), p=P_EXAMPLE2)
            seq = [rep.lhs, rep.ours, rep.comparators["p1_specialization"],
                   rep.comparators["pow2_chain"],
                   rep.comparators["beta_half_chain"]]
            assert np.max(np.diff(seq)) < 1e-9  # nonincreasing

    def test_upper_chain_ordering(self, example2_state):
        for alpha in np.linspace(0.0, 2.0, 41):
            rep = polygamy_upper_AB(example2_state, float(alpha), p=P_EXAMPLE2)
            seq = [rep.lhs, rep.ours, rep.comparators["p1_specialization"],
                   rep.comparators["pow2_chain"],
                   rep.comparators["beta_half_chain"]]
            assert np.min(np.diff(seq)) > -1e-9

    def test_product_state_upper_collapses(self):
        amp = np.zeros(16, dtype=complex)
        amp[0] = 1.0
        psi = PureState(qubit_shape(("A", "B", "C1", "C2")), amp)
        up = polygamy_upper_AB(psi, 1.0)
        assert up.lhs == 0.0 and abs(up.ours) < 1e-12

    def test_sandwich_random(self):
        for i in range(100):
            psi = haar_random_pure(4, 271, stream=i)
            for alpha in (0.25, 0.75, 1.25, 2.0):
                lo = monogamy_lower_AB(psi, alpha)
                up = polygamy_upper_AB(psi, alpha)
                assert lo.ours <= lo.lhs + 1e-9
                assert up.ours >= up.lhs - 1e-9

    def test_requires_four_subsystems(self, example1_state):
        with pytest.raises(ValueError, match="at least 4"):
            monogamy_lower_AB(example1_state, 1.0)

    def test_fallback_flagged_when_infeasible(self):
        # GHZ-like 4-qubit state: every pair CoA^2 equal, so singleton
        # t_1 = 2 > 1 and the grouping must collapse
        amp = np.zeros(16, dtype=complex)
        amp[0] = amp[15] = 1 / np.sqrt(2)
        psi = PureState(qubit_shape(("A", "B", "C1", "C2")), amp)
        up = polygamy_upper_AB(psi, 1.0)
        assert up.fallback["A"] and up.fallback["B"]
        assert all(g.k == 1 for g in up.groupings.values())
        assert up.ours >= up.lhs - 1e-9


class TestNegativityBounds:
    def test_rank_two_factor_is_one(self, example2_state):
        nb = negativity_bounds_AB(example2_state, 2.0, p=P_EXAMPLE2)
        up = polygamy_upper_AB(example2_state, 2.0, p=P_EXAMPLE2)
        lo = monogamy_lower_AB(example2_state, 2.0, p=P_EXAMPLE2)
        assert abs(nb.upper.ours - up.ours) < 1e-12
        assert abs(nb.lower.ours - lo.ours) < 1e-12

    def test_example2_alpha_two_value(self, example2_state):
        nb = negativity_bounds_AB(example2_state, 2.0, p=P_EXAMPLE2)
        assert abs(nb.upper.ours - 111 / 64) < 1e-12

    def test_product_state(self):
        amp = np.zeros(16, dtype=complex)
        amp[0] = 1.0
        psi = PureState(qubit_shape(("A", "B", "C1", "C2")), amp)
        nb = negativity_bounds_AB(psi, 1.0)
        assert nb.lower.lhs == 0.0
        assert nb.lower.ours <= 1e-12

    def test_sandwich_random(self):
        for i in range(100):
            psi = haar_random_pure(4, 619, stream=i)
            for alpha in (0.5, 1.0, 1.5, 2.0):
                nb = negativity_bounds_AB(psi, alpha)
                assert nb.lower.ours <= nb.lhs + 1e-9
                assert nb.upper.ours >= nb.lhs - 1e-9


class TestTripartiteBounds:
    def test_sandwich_thousand_seeds(self):
        for i in range(1000):
            psi = haar_random_pure(5, 911, stream=i)
            tri = tripartite_bounds(psi, 2.0)
            assert tri.lower.ours <= tri.lhs + 1e-9
            assert tri.upper.ours >= tri.lhs - 1e-9

    def test_alpha_zero(self):
        psi = haar_random_pure(5, 13, stream=0)
        tri = tripartite_bounds(psi, 0.0)
        assert tri.lhs == 1.0
        assert tri.upper.ours >= 1.0

    def test_product_state(self):
        amp = np.zeros(32, dtype=complex)
        amp[0] = 1.0
        psi = PureState(qubit_shape(("A", "B", "C1", "C2", "C3")), amp)
        tri = tripartite_bounds(psi, 1.0)
        assert tri.lhs == 0.0
        assert abs(tri.upper.ours) < 1e-12
        assert tri.lower.ours <= 1e-12

    def test_requires_five_subsystems(self, example2_state):
        with pytest.raises(ValueError, match="at least 5"):
            tripartite_bounds(example2_state, 1.0)


class TestMultiPartitionPolygamy:
    def test_single_focus_reduces_to_theorem(self, example1_state):
        rep = multi_partition_polygamy(example1_state, ["A"], 1.0,
                                       p={"A": (0.6,)})
        base = polygamy_bound_coa(example1_state, "A", 1.0, p=(0.6,))
        assert abs(rep.ours - base.ours) < 1e-15
        assert abs(rep.lhs - base.lhs) < 1e-15

    def test_two_focus_matches_ab_upper(self, example2_state):
        rep = multi_partition_polygamy(example2_state, ["A", "B"], 2.0,
                                       p=P_EXAMPLE2)
        up = polygamy_upper_AB(example2_state, 2.0, p=P_EXAMPLE2)
        assert abs(rep.ours - up.ours) < 1e-15

    def test_three_focus_random(self):
        for i in range(1000):
            psi = haar_random_pure(5, 733, stream=i)
            rep = multi_partition_polygamy(psi, ["A", "B", "C1"], 1.0)
            assert rep.ours >= rep.lhs - 1e-9

    def test_left_must_be_proper_subset(self, example2_state):
        with pytest.raises(ValueError):
            multi_partition_polygamy(example2_state,
                                     ["A", "B", "C1", "C2"], 1.0)


class TestComparatorOrdering:
    def test_ours_below_chain_on_feasible_groups(self):
        gen = np.random.default_rng(83)
        for _ in range(200):
            tail = np.sort(gen.uniform(0.01, 0.5, size=3))[::-1]
            head = tail.sum() + gen.uniform(0.0, 0.5)
            vals = np.concatenate([[head], tail])
            groups = [[v] for v in vals]
            ts = [vals[i + 1:].sum() / vals[i] for i in range(3)]
            if any(t > 1 for t in ts):
                continue
            expo = gen.uniform(0.0, 2.0)
            auto = BoundParams(exponent=expo,
                               p=tuple(max(t, 1e-6) for t in ts),
                               feasible=(True,) * 3)
            ones = BoundParams(exponent=expo, p=(1.0,) * 3,
                               feasible=(True,) * 3)
            ours = theta(groups, auto).value
            p1 = theta(groups, ones).value
            seq = [ours, p1,
                   chain_bound(vals, expo, "pow2_chain"),
                   chain_bound(vals, expo, "beta_half_chain"),
                   chain_bound(vals, expo, "trivial_sum")]
            assert np.min(np.diff(seq)) > -1e-12


class TestSixQubitEndToEnd:
    def test_all_cut_families_on_largest_register(self):
        for i in range(25):
            psi = haar_random_pure(6, 1009, stream=i)
            for alpha in (0.5, 1.5):
                lo = monogamy_lower_AB(psi, alpha)
                up = polygamy_upper_AB(psi, alpha)
                tri = tripartite_bounds(psi, alpha)
                nb = negativity_bounds_AB(psi, alpha)
                multi = multi_partition_polygamy(psi, ["A", "B", "C1", "C2"],
                                                 alpha)
                assert lo.ours <= lo.lhs + 1e-9 <= up.ours + 2e-9
                assert tri.lower.ours <= tri.lhs + 1e-9 <= tri.upper.ours + 2e-9
                assert nb.lower.ours <= nb.lhs + 1e-9 <= nb.upper.ours + 2e-9
                assert multi.ours >= multi.lhs - 1e-9
