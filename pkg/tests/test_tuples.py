import pytest
from hypothesis import given, strategies as st

from tetracurves.exceptions import (
    IsMinimalError,
    IsTrivialError,
    NotApplicableError,
    TrivialCurveError,
)
from tetracurves.monomials import Monomial
from tetracurves.tuples import (
    ReductionType,
    TetTuple,
    TerminalKind,
    VERTEX_PERMUTATIONS,
    apply_reduction,
    canonicalize,
    ci_power_form,
    buchsbaum_minimal_r,
    degree_of_tuple,
    facet_weights,
    is_cwl,
    is_minimal,
    max_weight_reduction,
    minimal_by_weight_test,
    permute,
    reduction_applicable,
    reduction_trace,
    regularity_closed_form,
    schwartau_status,
)

tet_tuples = st.tuples(*[st.integers(0, 4)] * 6).map(TetTuple)
small_tuples = st.tuples(*[st.integers(0, 3)] * 6).map(TetTuple)
permutations = st.sampled_from(VERTEX_PERMUTATIONS)


def T(text):
    return TetTuple.parse(text)


class TestTetTuple:
    def test_parse_and_format(self):
        t = T("3,3,3,1,2,4")
        assert t.entries == (3, 3, 3, 1, 2, 4)
        assert str(t) == "3,3,3,1,2,4"
        assert TetTuple.parse(" 1, 0,0,0,0, 1 ").entries == (1, 0, 0, 0, 0, 1)

    @pytest.mark.parametrize("bad", ["3,3,3", "1,2,3,4,5,x", "1,2,3,4,5,-1", ""])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            TetTuple.parse(bad)

    def test_trivial(self):
        assert T("0,0,0,0,0,0").is_trivial
        assert not T("1,0,0,0,0,0").is_trivial


class TestFacetWeights:
    def test_worked_example(self):
        assert facet_weights(T("3,3,3,1,2,4")) == (9, 6, 8, 9)

    def test_trivial(self):
        assert facet_weights(T("0,0,0,0,0,0")) == (0, 0, 0, 0)

    def test_two_skew_lines(self):
        assert facet_weights(T("1,0,0,0,0,1")) == (1, 1, 1, 1)


class TestApplicability:
    def test_worked_example(self):
        t = T("3,3,3,1,2,4")
        assert reduction_applicable(t, ReductionType.A)
        assert not reduction_applicable(t, ReductionType.B)
        assert reduction_applicable(t, ReductionType.C)
        assert reduction_applicable(t, ReductionType.D)

    def test_trivial_admits_nothing(self):
        for ty in ReductionType:
            assert not reduction_applicable(T("0,0,0,0,0,0"), ty)


class TestApplyReduction:
    def test_type_a(self):
        step = apply_reduction(T("3,3,3,1,2,4"), ReductionType.A)
        assert step.child == T("2,2,2,1,2,4")
        assert step.F == Monomial.parse("b^3*c^3*d^3")
        assert step.G_name == "a"

    def test_type_d(self):
        step = apply_reduction(T("3,3,3,1,2,4"), ReductionType.D)
        assert step.child == T("3,3,2,1,1,3")
        assert step.F == Monomial.parse("a^3*b^2*c^4")
        assert step.G_name == "d"

    def test_single_line(self):
        step = apply_reduction(T("1,0,0,0,0,0"), ReductionType.A)
        assert step.child.is_trivial
        assert step.F == Monomial.parse("b")
        assert step.G_name == "a"

    def test_not_applicable(self):
        with pytest.raises(NotApplicableError):
            apply_reduction(T("3,3,3,1,2,4"), ReductionType.B)
        with pytest.raises(NotApplicableError):
            apply_reduction(T("0,0,0,0,0,0"), ReductionType.A)


class TestMaxWeightReduction:
    def test_tie_break_prefers_a(self):
        step = max_weight_reduction(T("3,3,3,1,2,4"))
        assert step.type is ReductionType.A
        assert step.child == T("2,2,2,1,2,4")

    def test_chain_element(self):
        step = max_weight_reduction(T("2,2,1,1,1,3"))
        assert step.type is ReductionType.C
        assert step.child == T("2,1,1,0,1,2")

    def test_minimal_raises(self):
        with pytest.raises(IsMinimalError):
            max_weight_reduction(T("1,0,0,0,0,1"))

    def test_trivial_raises(self):
        with pytest.raises(IsTrivialError):
            max_weight_reduction(T("0,0,0,0,0,0"))


class TestReductionTrace:
    def test_worked_example(self):
        trace = reduction_trace(T("3,3,3,1,2,4"))
        assert trace.terminal == T("1,0,0,0,0,1")
        assert trace.terminal_kind is TerminalKind.MINIMAL
        chain = [str(c) for c in trace.chain]
        for expected in ("2,2,2,1,2,4", "2,2,1,1,1,3", "2,1,1,0,1,2"):
            assert expected in chain

    def test_acm_chain(self):
        trace = reduction_trace(T("1,2,1,2,0,2"))
        assert [str(c) for c in trace.chain] == [
            "1,2,1,2,0,2",
            "1,1,1,1,0,1",
            "0,0,0,1,0,1",
            "0,0,0,0,0,0",
        ]
        assert trace.is_acm
        assert trace.first_ci_power is None

    def test_first_ci_power(self):
        trace = reduction_trace(T("1,3,4,2,3,0"))
        index, r = trace.first_ci_power
        assert r == 2
        assert trace.chain[index] == T("0,2,2,2,2,0")
        assert trace.is_acm

    def test_trace_of_trivial(self):
        trace = reduction_trace(T("0,0,0,0,0,0"))
        assert trace.steps == ()
        assert trace.terminal_kind is TerminalKind.TRIVIAL


class TestMinimality:
    @pytest.mark.parametrize(
        "text,expected",
        [("1,0,0,0,0,1", True), ("4,1,2,1,1,5", True), ("0,1,1,1,1,0", False)],
    )
    def test_examples(self, text, expected):
        assert is_minimal(T(text)) is expected

    def test_trivial_not_minimal(self):
        assert not is_minimal(T("0,0,0,0,0,0"))

    @given(tet_tuples)
    def test_weight_criterion_agrees(self, t):
        assert is_minimal(t) == minimal_by_weight_test(t)


class TestCanonicalize:
    def test_two_skew_lines(self):
        canon, pi = canonicalize(T("0,1,0,0,1,0"))
        assert canon == T("0,0,1,1,0,0")
        assert permute(T("0,1,0,0,1,0"), pi) == canon

    def test_trivial_fixed(self):
        assert canonicalize(T("0,0,0,0,0,0"))[0] == T("0,0,0,0,0,0")

    def test_buchsbaum_orbit(self):
        model = T("3,0,2,2,0,3")
        expected = canonicalize(model)[0]
        for pi in VERTEX_PERMUTATIONS:
            assert canonicalize(permute(model, pi))[0] == expected

    @given(tet_tuples, permutations)
    def test_orbit_invariant(self, t, pi):
        assert canonicalize(permute(t, pi))[0] == canonicalize(t)[0]

    @given(tet_tuples)
    def test_is_orbit_minimum(self, t):
        canon = canonicalize(t)[0]
        assert all(canon <= permute(t, pi) for pi in VERTEX_PERMUTATIONS)


class TestPermutationAction:
    @given(tet_tuples, permutations, permutations)
    def test_composition(self, t, pi, sigma):
        composed = tuple(sigma[pi[v]] for v in range(4))
        assert permute(permute(t, pi), sigma) == permute(t, composed)

    @given(tet_tuples)
    def test_identity(self, t):
        assert permute(t, (0, 1, 2, 3)) == t


class TestCiPowerForm:
    @pytest.mark.parametrize(
        "text,expected",
        [("0,2,2,2,2,0", 2), ("1,1,0,0,1,1", 1), ("1,2,1,2,0,2", None), ("0,0,0,0,0,0", None)],
    )
    def test_examples(self, text, expected):
        assert ci_power_form(T(text)) == expected


class TestBuchsbaumDetection:
    def test_examples(self):
        assert buchsbaum_minimal_r(T("1,0,0,0,0,1")) == 1
        assert buchsbaum_minimal_r(T("2,0,1,1,0,2")) == 2
        assert buchsbaum_minimal_r(T("0,2,1,1,2,0")) == 2
        assert buchsbaum_minimal_r(T("4,1,2,1,1,5")) is None


class TestComponentwiseLinearity:
    @pytest.mark.parametrize(
        "text,expected",
        [("10,1,2,3,10,1", True), ("0,2,2,2,2,0", False), ("7,5,5,2,1,6", True)],
    )
    def test_examples(self, text, expected):
        assert is_cwl(T(text)) is expected

    def test_trivial_raises(self):
        with pytest.raises(TrivialCurveError):
            is_cwl(T("0,0,0,0,0,0"))


class TestSchwartau:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1,0,1,1,0,1", (True, False)),
            ("2,0,1,1,0,1", (True, True)),
            ("1,1,1,1,1,1", (False, True)),
        ],
    )
    def test_examples(self, text, expected):
        assert schwartau_status(T(text)) == expected

    @given(tet_tuples)
    def test_agrees_with_is_cwl(self, t):
        if t.is_trivial:
            return
        assert schwartau_status(t)[1] == is_cwl(t)


class TestDegree:
    def test_buchsbaum_series(self):
        for r in range(1, 5):
            assert degree_of_tuple(TetTuple((r + 1, 0, r, r, 0, r + 1))) == 2 * (r + 1) ** 2

    def test_examples(self):
        assert degree_of_tuple(T("0,0,0,0,0,0")) == 0
        assert degree_of_tuple(T("3,3,3,1,2,4")) == 32

    @given(tet_tuples)
    def test_additive_along_steps(self, t):
        for step in reduction_trace(t).steps:
            assert degree_of_tuple(step.parent) == degree_of_tuple(step.child) + step.weight


class TestRegularityClosedForm:
    @pytest.mark.parametrize(
        "text,expected",
        [("0,2,2,2,2,0", 5), ("4,1,2,1,1,5", 9), ("7,5,5,2,1,6", 17)],
    )
    def test_examples(self, text, expected):
        assert regularity_closed_form(T(text)) == expected

    def test_trivial_raises(self):
        with pytest.raises(TrivialCurveError):
            regularity_closed_form(T("0,0,0,0,0,0"))

    def test_minimal_exceeds_facet_weight(self):
        t = T("1,0,0,0,0,1")
        assert regularity_closed_form(t) == 2 > max(facet_weights(t))

    @given(small_tuples, permutations)
    def test_symmetry_invariant(self, t, pi):
        if t.is_trivial:
            return
        assert regularity_closed_form(t) == regularity_closed_form(permute(t, pi))
