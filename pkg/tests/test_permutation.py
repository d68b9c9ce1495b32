import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permroot.errors import CycleNotationError, DomainError, InvalidPermutationError
from permroot.permutation import (
    CycleType,
    EnrichedPermutation,
    Permutation,
    parse,
    parse_cycle_type,
)


def random_permutations(max_n=10):
    """Strategy: a random permutation of a random subset of 1..2*max_n."""
    return (
        st.lists(st.integers(1, 2 * max_n), max_size=max_n, unique=True)
        .flatmap(
            lambda elems: st.permutations(elems).map(
                lambda images: Permutation.from_one_line(sorted(elems), images)
            )
        )
    )


class TestParseFormat:
    def test_enriched_example(self):
        e = parse("(1 2 4)_2 (3) (5 6)", r=3)
        assert isinstance(e, EnrichedPermutation)
        assert e.base.cycles == ((1, 2, 4), (3,), (5, 6))
        assert e.colors() == {0: 2}

    def test_empty(self):
        assert parse("") == Permutation()
        assert str(Permutation()) == ""
        assert parse("", r=3) == EnrichedPermutation(Permutation(), 3, ())

    def test_canonical_rotation(self):
        assert str(parse("(2 1)")) == "(1 2)"
        assert str(parse("(5 6) (3)")) == "(3) (5 6)"

    def test_identity_format(self):
        assert str(Permutation.identity([1, 2])) == "(1) (2)"

    def test_adjacent_cycles_without_space(self):
        assert parse("(1 2 3 4)(5 6 7 8)") == parse("(1 2 3 4) (5 6 7 8)")

    def test_repeated_element_same_cycle(self):
        with pytest.raises(InvalidPermutationError):
            parse("(1 2 1)")

    def test_element_in_two_cycles(self):
        with pytest.raises(InvalidPermutationError):
            parse("(1 2) (2 3)")

    def test_color_out_of_range(self):
        with pytest.raises(InvalidPermutationError):
            parse("(1 2 3)_3", r=3)
        with pytest.raises(InvalidPermutationError):
            parse("(1 2 3)_0", r=3)

    def test_color_on_regular_cycle(self):
        with pytest.raises(InvalidPermutationError):
            parse("(1 2)_1 (3 4 5)", r=3)

    def test_missing_color_on_singular_cycle(self):
        with pytest.raises(InvalidPermutationError):
            parse("(1 2 3)", r=3)

    def test_subscript_without_r(self):
        with pytest.raises(CycleNotationError):
            parse("(1 2)_1")

    def test_malformed(self):
        for bad in ("(1 2", "1 2)", "(1 2) x (3)", "()", "(0 1)", "(1,2)"):
            with pytest.raises((CycleNotationError, InvalidPermutationError)):
                parse(bad)

    def test_colors_follow_cycles_through_canonicalization(self):
        e = parse("(3 4 5)_1 (1 2 6)_2", r=3)
        assert str(e) == "(1 2 6)_2 (3 4 5)_1"

    @given(random_permutations())
    @settings(max_examples=150, deadline=None)
    def test_roundtrip(self, p):
        assert parse(str(p)) == p

    def test_normalization_idempotent(self):
        for messy in ("(6 5) (2 1 3)", "(9)(4 8)(2 7)", "(3 1 2)"):
            once = str(parse(messy))
            assert str(parse(once)) == once

    def test_json_roundtrip(self):
        e = parse("(1 2 4)_2 (3) (5 6)", r=3)
        data = e.to_json_dict()
        assert data == {"cycles": [[1, 2, 4], [3], [5, 6]], "colors": {"0": 2}, "r": 3}
        assert EnrichedPermutation.from_json_dict(data) == e
        p = parse("(1 3) (2)")
        assert Permutation.from_json_dict(p.to_json_dict()) == p


class TestPermutationOps:
    def test_power_square_root_example(self, P):
        assert P("(1 5 2 6 3 7 4 8)").power(2) == P("(1 2 3 4) (5 6 7 8)")

    def test_power_identity_cases(self, P):
        p = P("(1 2 3)")
        assert p.power(1) == p
        assert p.power(3) == Permutation.identity([1, 2, 3])
        assert p.power(0) == Permutation.identity([1, 2, 3])

    def test_power_rejects_negative(self, P):
        with pytest.raises(DomainError):
            P("(1 2)").power(-1)

    @given(random_permutations(), st.integers(0, 8), st.integers(0, 8))
    @settings(max_examples=100, deadline=None)
    def test_power_additivity(self, p, e1, e2):
        assert p.power(e1 + e2) == p.power(e1).compose(p.power(e2))

    def test_cycle_type(self, P):
        p = P("(1 2) (3 4) (5 9 7 8) (6 10 11 13) (12)")
        assert p.cycle_type() == CycleType([(1, 1), (2, 2), (4, 2)])
        assert Permutation().cycle_type() == CycleType()
        assert Permutation.identity(range(1, 5)).cycle_type() == CycleType([(1, 4)])

    def test_split_parts(self, P):
        p = P("(1 2) (3 4) (5 9 7 8) (6 10 11 13) (12)")
        regular, singular = p.split_parts(2)
        assert regular == P("(12)")
        assert singular == P("(1 2) (3 4) (5 9 7 8) (6 10 11 13)")
        ident = Permutation.identity(range(1, 4))
        assert ident.split_parts(2) == (ident, Permutation())
        assert P("(1 2 3)").split_parts(3) == (Permutation(), P("(1 2 3)"))

    @given(random_permutations(), st.integers(2, 5))
    @settings(max_examples=100, deadline=None)
    def test_split_parts_recombine(self, p, q):
        regular, singular = p.split_parts(q)
        assert set(regular.cycles) | set(singular.cycles) == set(p.cycles)
        assert regular.ground_set() | singular.ground_set() == p.ground_set()
        assert not regular.ground_set() & singular.ground_set()

    def test_apply_and_one_line(self, P):
        p = P("(1 3 2)")
        assert [p.apply(i) for i in (1, 2, 3)] == [3, 1, 2]
        assert p.one_line() == (3, 1, 2)
        with pytest.raises(DomainError):
            p.apply(9)

    def test_compose_requires_same_ground_set(self, P):
        with pytest.raises(DomainError):
            P("(1 2)").compose(P("(3 4)"))

    def test_relabel(self, P):
        assert P("(1 2) (3)").relabel({1: 3, 2: 6, 3: 5}) == P("(3 6) (5)")

    def test_from_mapping_rejects_non_bijection(self):
        with pytest.raises(InvalidPermutationError):
            Permutation.from_mapping({1: 2, 2: 2})


class TestEnriched:
    def test_r2_isomorphism(self, P):
        p = P("(1 2) (3) (4 5 6 7)")
        e = EnrichedPermutation.from_plain(p)
        assert e.r == 2
        assert e.colors() == {0: 1, 2: 1}
        assert e.to_plain() == p

    def test_color_validation(self, P):
        with pytest.raises(InvalidPermutationError):
            EnrichedPermutation(P("(1 2)"), 2, (None,))
        with pytest.raises(InvalidPermutationError):
            EnrichedPermutation(P("(1 2 3)"), 2, (1,))

    def test_colors_by_index_mapping(self, P):
        e = EnrichedPermutation(P("(1 2 4) (3) (5 6)"), 3, {"0": 2})
        assert e == parse("(1 2 4)_2 (3) (5 6)", r=3)


class TestCycleType:
    def test_total_and_counts(self):
        t = CycleType([(2, 2), (4, 2), (1, 1)])
        assert t.total == 13
        assert t.count_of(4) == 2
        assert t.count_of(3) == 0
        assert t.expand() == (1, 2, 2, 4, 4)
        assert str(t) == "1^1 2^2 4^2"

    def test_parse(self):
        assert parse_cycle_type("1^2,4^2") == CycleType([(1, 2), (4, 2)])
        assert parse_cycle_type("2^2 4^2") == CycleType([(2, 2), (4, 2)])
        assert parse_cycle_type("4") == CycleType([(4, 1)])
        assert parse_cycle_type("") == CycleType()
        with pytest.raises(CycleNotationError):
            parse_cycle_type("2^2,2^1")
        with pytest.raises(CycleNotationError):
            parse_cycle_type("x^2")
