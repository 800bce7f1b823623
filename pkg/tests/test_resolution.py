import pytest
from hypothesis import given, settings, strategies as st

from tetracurves.exceptions import (
    IsACMError,
    NotMinimalError,
    TrivialCurveError,
)
from tetracurves.koszul import cached_betti_oracle
from tetracurves.monomials import ideal_of_tuple
from tetracurves.resolution import (
    BaseKind,
    acm_linear_family,
    all_max_weight_chains,
    ascent_candidates,
    betti_table,
    ci_power_betti,
    classify,
    enumerate_linear_in_class,
    gin_betti_prediction,
    has_linear_resolution,
    minimal_curve_betti,
    recipe_from_chain,
    resolution_recipe,
)
from tetracurves.tuples import (
    ReductionType,
    TetTuple,
    apply_reduction,
    canonicalize,
)

small_tuples = st.tuples(*[st.integers(0, 3)] * 6).map(TetTuple)


def T(text):
    return TetTuple.parse(text)


def orbits(*texts):
    return {canonicalize(T(s))[0] for s in texts}


class TestMinimalCurveBetti:
    def test_two_skew_lines(self):
        assert minimal_curve_betti(T("1,0,0,0,0,1")).as_dict() == {
            (0, 2): 4,
            (1, 3): 4,
            (2, 4): 1,
        }

    def test_worked_example(self):
        assert minimal_curve_betti(T("4,1,2,1,1,5")).as_dict() == {
            (0, 9): 24,
            (1, 10): 37,
            (2, 11): 14,
        }

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_buchsbaum_series(self, r):
        t = TetTuple((r, 0, r - 1, r - 1, 0, r))
        assert minimal_curve_betti(t).as_dict() == {
            (0, 2 * r): 3 * r + 1,
            (1, 2 * r + 1): 4 * r,
            (2, 2 * r + 2): r,
        }

    def test_rejects_non_minimal(self):
        with pytest.raises(NotMinimalError):
            minimal_curve_betti(T("3,3,3,1,2,4"))


class TestCiPowerBetti:
    @pytest.mark.parametrize("r,gens,syz", [(1, 2, 1), (2, 3, 2), (4, 5, 4)])
    def test_series(self, r, gens, syz):
        assert ci_power_betti(r).as_dict() == {(0, 2 * r): gens, (1, 2 * r + 2): syz}

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            ci_power_betti(0)


WORKED_TABLES = {
    "1,2,1,2,0,2": {(0, 6): 1, (0, 4): 2, (0, 3): 1, (1, 7): 1, (1, 5): 2},
    "1,3,4,2,3,0": {(0, 8): 1, (0, 7): 1, (0, 6): 3, (1, 9): 1, (1, 8): 3},
    "7,5,5,2,1,6": {
        (0, 17): 1,
        (0, 15): 1,
        (0, 13): 26,
        (1, 18): 1,
        (1, 16): 1,
        (1, 14): 39,
        (2, 15): 14,
    },
}


class TestBettiTableAssembly:
    @pytest.mark.parametrize("text,expected", WORKED_TABLES.items())
    def test_worked_examples(self, text, expected):
        assert betti_table(T(text)).as_dict() == expected

    def test_ci_power_direct(self):
        assert betti_table(T("0,2,2,2,2,0")) == ci_power_betti(2)

    def test_trivial_raises(self):
        with pytest.raises(TrivialCurveError):
            betti_table(T("0,0,0,0,0,0"))

    def test_recipe_structure_non_acm(self):
        recipe = resolution_recipe(T("7,5,5,2,1,6"))
        assert recipe.base_kind is BaseKind.MINIMAL_CURVE
        assert recipe.base == T("4,1,2,1,1,5")
        assert [w for w, _ in recipe.steps] == [17, 14, 11, 10]
        assert [s for _, s in recipe.steps] == [0, 1, 2, 3]

    def test_recipe_structure_acm_cwl(self):
        recipe = resolution_recipe(T("1,2,1,2,0,2"))
        assert recipe.base_kind is BaseKind.TRIVIAL
        assert recipe.base_betti.as_dict() == {(0, 0): 1}
        assert len(recipe.steps) == 3

    def test_recipe_structure_acm_not_cwl(self):
        recipe = resolution_recipe(T("1,3,4,2,3,0"))
        assert recipe.base_kind is BaseKind.CI_POWER
        assert recipe.base == T("0,2,2,2,2,0")
        assert len(recipe.steps) == 2

    @given(small_tuples)
    @settings(max_examples=40)
    def test_matches_oracle(self, t):
        if t.is_trivial:
            return
        assert betti_table(t) == cached_betti_oracle(ideal_of_tuple(t))

    def test_tie_break_independent(self):
        t = T("3,3,3,1,2,4")
        expected = betti_table(t)
        chains = list(all_max_weight_chains(t))
        assert len(chains) > 1
        for chain in chains:
            assert recipe_from_chain(chain).assemble() == expected


class TestLinearResolution:
    @pytest.mark.parametrize(
        "text,expected",
        [("2,1,1,1,1,2", True), ("1,2,1,2,0,2", False), ("3,2,1,1,2,3", True)],
    )
    def test_examples(self, text, expected):
        assert has_linear_resolution(T(text)) is expected

    def test_trivial_raises(self):
        with pytest.raises(TrivialCurveError):
            has_linear_resolution(T("0,0,0,0,0,0"))


class TestAcmLinearFamily:
    def test_fat_line(self):
        assert acm_linear_family(T("3,0,0,0,0,0")) == ("a", 3)
        assert acm_linear_family(T("0,0,0,0,7,0")) == ("a", 7)

    def test_fixed_families(self):
        assert acm_linear_family(T("1,1,0,1,0,0")) == ("b", None)
        assert acm_linear_family(T("1,1,1,1,1,1")) == ("c", None)
        assert acm_linear_family(T("2,1,0,1,0,1")) == ("d", None)
        assert acm_linear_family(T("2,1,1,1,1,2")) == ("e", None)
        assert acm_linear_family(T("1,2,1,1,2,1")) == ("e", None)

    def test_non_members(self):
        assert acm_linear_family(T("2,1,1,1,1,1")) is None
        assert acm_linear_family(T("0,0,0,0,0,0")) is None


class TestAscentCandidates:
    def test_two_skew_lines_degree_three(self):
        got = ascent_candidates(T("1,0,0,0,0,1"), 3)
        parents = {p for p, _ in got}
        assert T("2,1,0,0,0,1") in parents
        assert T("2,0,1,0,0,1") in parents
        assert all(
            apply_reduction(p, ty).child == T("1,0,0,0,0,1") and
            apply_reduction(p, ty).weight == 3
            for p, ty in got
        )

    def test_single_lines_over_trivial(self):
        got = ascent_candidates(T("0,0,0,0,0,0"), 1)
        parents = {p for p, _ in got}
        lines = {TetTuple(tuple(1 if i == k else 0 for i in range(6))) for k in range(6)}
        assert parents == lines

    def test_round_trip_at_degree_ten(self):
        target = T("0,4,4,4,4,0")
        got = ascent_candidates(target, 10)
        assert got
        for parent, ty in got:
            step = apply_reduction(parent, ty)
            assert step.child == target and step.weight == 10
        assert all(p != T("2,5,5,5,5,0") for p, _ in got)

    @given(small_tuples)
    @settings(max_examples=30)
    def test_every_candidate_reduces_back(self, t):
        for parent, ty in ascent_candidates(t):
            assert apply_reduction(parent, ty).child == t


class TestEnumerateLinearInClass:
    def test_two_skew_lines_class(self):
        # Verified against brute-force search and the Koszul oracle; the
        # published seven-orbit list misses the (3,1,0,0,1,1) orbit and
        # misprints (2,1,1,1,0,2) as the ACM tuple (2,1,1,1,0,1).
        got = enumerate_linear_in_class(T("1,0,0,0,0,1"))
        assert got == orbits(
            "1,0,0,0,0,1",
            "2,1,0,0,0,1",
            "3,1,0,1,0,1",
            "3,1,0,0,1,1",
            "2,2,0,0,0,2",
            "2,1,1,1,0,2",
            "3,2,0,1,1,2",
            "3,2,1,1,2,3",
        )

    def test_double_line_pair_class(self):
        # frozen from an exhaustive scan over entries <= 5, oracle-checked
        got = enumerate_linear_in_class(T("2,0,0,0,0,2"))
        assert got == orbits(
            "0,0,2,2,0,0",
            "0,0,3,2,1,1",
            "0,1,3,3,1,2",
            "1,1,2,4,1,1",
            "1,1,3,4,2,2",
            "2,2,4,4,2,2",
        )

    def test_isolated_class(self):
        assert enumerate_linear_in_class(T("3,0,0,0,0,3")) == orbits("3,0,0,0,0,3")

    def test_rejects_non_minimal(self):
        with pytest.raises(NotMinimalError):
            enumerate_linear_in_class(T("3,3,3,1,2,4"))

    def test_rejects_acm(self):
        with pytest.raises(IsACMError):
            enumerate_linear_in_class(T("1,1,1,1,1,1"))


class TestGinBettiPrediction:
    def test_adds_generators_at_degree_eleven(self):
        t = T("2,5,5,5,5,0")
        base = betti_table(t)
        predicted = gin_betti_prediction(t)
        assert predicted.rank(0, 11) == 4 and predicted.rank(1, 11) == 4
        delta = {
            key: predicted.as_dict()[key] - base.as_dict().get(key, 0)
            for key in predicted.as_dict()
            if predicted.as_dict()[key] != base.as_dict().get(key, 0)
        }
        assert delta == {(0, 11): 4, (1, 11): 4}

    @pytest.mark.parametrize("r", [2, 3])
    def test_ci_power_adds_r(self, r):
        t = TetTuple((0, r, r, r, r, 0))
        predicted = gin_betti_prediction(t)
        assert predicted.rank(0, 2 * r + 1) == r and predicted.rank(1, 2 * r + 1) == r

    def test_cwl_unchanged(self):
        t = T("10,1,2,3,10,1")
        assert gin_betti_prediction(t) == betti_table(t)


class TestClassify:
    def test_trivial(self):
        report = classify(T("0,0,0,0,0,0"))
        assert report.trivial and not report.acm and not report.minimal
        assert report.degree == 0 and report.regularity is None

    def test_cwl_acm(self):
        report = classify(T("10,1,2,3,10,1"))
        assert report.acm and report.componentwise_linear and not report.minimal

    def test_ci_power(self):
        report = classify(T("0,2,2,2,2,0"))
        assert report.acm and not report.componentwise_linear
        assert report.ci_power_r == 2 and report.regularity == 5

    def test_buchsbaum_minimal(self):
        report = classify(T("2,0,1,1,0,2"))
        assert report.minimal and not report.acm
        assert report.buchsbaum_minimal_r == 2
        assert report.linear_resolution and report.componentwise_linear

    def test_flag_implications(self):
        for text in ("1,0,0,0,0,1", "1,2,1,2,0,2", "0,2,2,2,2,0", "4,1,2,1,1,5"):
            report = classify(T(text))
            if report.minimal:
                assert not report.acm
            if report.linear_resolution:
                assert report.componentwise_linear
