import pytest
from hypothesis import given, strategies as st

from tetracurves.exceptions import (
    BoundTooSmallError,
    FNotInIdealError,
    GDividesFError,
)
from tetracurves.monomials import (
    Monomial,
    MonomialIdeal,
    basic_double_link,
    component_ideal,
    degrevlex_key,
    hilbert_data,
    ideal_of_tuple,
    minimalize,
    monomials_of_degree,
    truncate,
)

monomials = st.tuples(*[st.integers(0, 4)] * 4).map(Monomial)


def M(text):
    return Monomial.parse(text)


class TestMonomial:
    def test_parse_and_str(self):
        assert str(M("a^2*b*c^3")) == "a^2*b*c^3"
        assert M("1") == Monomial.one()
        assert str(Monomial.one()) == "1"
        assert M("b^2").exps == (0, 2, 0, 0)

    def test_arith(self):
        assert M("a*b") * M("b*c") == M("a*b^2*c")
        assert M("a*b^2*c") / M("b*c") == M("a*b")
        assert M("a").lcm(M("b")) == M("a*b")
        with pytest.raises(ValueError):
            M("a") / M("b")

    def test_divides(self):
        assert M("a*b").divides(M("a^2*b"))
        assert not M("a*b").divides(M("a*c"))

    def test_degrevlex_order(self):
        # a > b > c > d, and ab > c^2 in degree two
        assert degrevlex_key(M("a")) > degrevlex_key(M("b"))
        assert degrevlex_key(M("c")) > degrevlex_key(M("d"))
        assert degrevlex_key(M("a*b")) > degrevlex_key(M("c^2"))

    @given(monomials, monomials)
    def test_lcm_divisible(self, u, v):
        assert u.divides(u.lcm(v)) and v.divides(u.lcm(v))

    @given(monomials)
    def test_parse_round_trip(self, m):
        assert Monomial.parse(str(m)) == m


class TestMinimalize:
    def test_drops_multiples(self):
        gens = [M("a"), M("a*b"), M("b^2"), M("a^2")]
        assert minimalize(gens) == [M("a"), M("b^2")]

    @given(st.lists(monomials, min_size=1, max_size=12))
    def test_result_is_antichain(self, ms):
        kept = minimalize(ms)
        for i, u in enumerate(kept):
            for j, v in enumerate(kept):
                if i != j:
                    assert not u.divides(v)

    def test_bulk_path_matches_small_path(self):
        import itertools

        ms = [Monomial(e) for e in itertools.product(range(4), repeat=4)]
        small = minimalize(ms[:50])
        assert set(minimalize(ms)) <= set(ms)
        assert minimalize(small) == small


class TestIdealOfTuple:
    def test_two_skew_lines(self):
        assert ideal_of_tuple((1, 0, 0, 0, 0, 1)) == MonomialIdeal.of("a*c", "a*d", "b*c", "b*d")

    def test_complete_intersection(self):
        assert ideal_of_tuple((0, 1, 1, 1, 1, 0)) == MonomialIdeal.of("a*b", "c*d")

    def test_trivial_is_unit(self):
        assert ideal_of_tuple((0, 0, 0, 0, 0, 0)).is_unit

    def test_ci_power(self):
        assert ideal_of_tuple((0, 2, 2, 2, 2, 0)) == MonomialIdeal.of(
            "a^2*b^2", "a*b*c*d", "c^2*d^2"
        )


class TestContains:
    def test_examples(self):
        I = MonomialIdeal.of("a*b", "c*d")
        assert I.contains(M("a^2*b"))
        assert not I.contains(M("a*c"))
        assert ideal_of_tuple((0, 1, 1, 1, 1, 0)).contains(M("a*b*c*d"))


class TestBasicDoubleLink:
    def test_line_from_trivial(self):
        assert basic_double_link(MonomialIdeal.unit(), "a", M("b")) == MonomialIdeal.of("a", "b")

    def test_from_worked_chain(self):
        assert basic_double_link(MonomialIdeal.unit(), "c", M("b*d")) == MonomialIdeal.of(
            "c", "b*d"
        )

    def test_reconstructs_parent_ideal(self):
        child = ideal_of_tuple((2, 2, 2, 1, 2, 4))
        rebuilt = basic_double_link(child, "a", M("b^3*c^3*d^3"))
        assert rebuilt == ideal_of_tuple((3, 3, 3, 1, 2, 4))

    def test_f_not_in_ideal(self):
        with pytest.raises(FNotInIdealError):
            basic_double_link(MonomialIdeal.of("a*b"), "c", M("a*d"))

    def test_g_divides_f(self):
        with pytest.raises(GDividesFError):
            basic_double_link(MonomialIdeal.of("a*b"), "a", M("a*b"))


class TestComponentIdeal:
    def test_all_degree_two_members(self):
        # every degree-2 monomial divisible by a or b, not just those in a, b
        assert component_ideal(MonomialIdeal.of("a", "b"), 2) == MonomialIdeal.of(
            "a^2", "a*b", "b^2", "a*c", "a*d", "b*c", "b*d"
        )

    def test_equigenerated(self):
        I = MonomialIdeal.of("a*b", "c*d")
        assert component_ideal(I, 2) == I

    def test_degree_three_part_of_two_skew_lines(self):
        piece = component_ideal(ideal_of_tuple((1, 0, 0, 0, 0, 1)), 3)
        assert len(piece.generators) == 12
        assert all(g.degree == 3 for g in piece.generators)
        expected = {
            m
            for m in monomials_of_degree(3)
            if ideal_of_tuple((1, 0, 0, 0, 0, 1)).contains(m)
        }
        assert set(piece.generators) == expected


class TestTruncate:
    def test_below_generators(self):
        assert truncate(MonomialIdeal.of("a", "b"), 1) == MonomialIdeal.of("a", "b")

    def test_above_generators(self):
        assert truncate(MonomialIdeal.of("a", "b"), 2) == MonomialIdeal.of(
            "a^2", "a*b", "b^2", "a*c", "a*d", "b*c", "b*d"
        )

    def test_ci_degree_three(self):
        got = truncate(ideal_of_tuple((0, 1, 1, 1, 1, 0)), 3)
        assert got == MonomialIdeal.of(
            "a^2*b", "a*b^2", "a*b*c", "a*b*d", "a*c*d", "b*c*d", "c^2*d", "c*d^2"
        )


class TestHilbertData:
    def test_line(self):
        data = hilbert_data(MonomialIdeal.of("a", "b"), 3)
        assert data.values == (1, 2, 3, 4)
        assert data.degree == 1
        assert data.h_vector == (1,)

    def test_two_skew_lines_degree(self):
        assert hilbert_data(ideal_of_tuple((1, 0, 0, 0, 0, 1)), 6).degree == 2

    def test_degree_formula_agreement(self):
        assert hilbert_data(ideal_of_tuple((2, 0, 1, 1, 0, 2)), 8).degree == 8

    def test_unit_ideal(self):
        data = hilbert_data(MonomialIdeal.unit(), 2)
        assert data.values == (0, 0, 0)
        assert data.degree == 0
        assert data.h_vector == ()

    def test_bound_too_small(self):
        with pytest.raises(BoundTooSmallError):
            hilbert_data(MonomialIdeal.zero(), 6)
        with pytest.raises(BoundTooSmallError):
            hilbert_data(MonomialIdeal.of("a", "b"), 0)


class TestIdealEquality:
    @given(st.lists(monomials, min_size=1, max_size=8))
    def test_normalization_idempotent(self, gens):
        I = MonomialIdeal(tuple(gens))
        assert MonomialIdeal(I.generators) == I
        assert I + I == I

    @given(st.lists(monomials, min_size=1, max_size=8), monomials)
    def test_scaling_membership(self, gens, m):
        I = MonomialIdeal(tuple(gens))
        scaled = I.scaled(m)
        assert all(scaled.contains(m * g) for g in I.generators)
