import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from permroot.bijections import (
    extend_regular,
    extract_element,
    from_enriched_cycles,
    from_nearly_regular,
    grow_first_cycle,
    insert_element,
    merge_cycle_class,
    shrink_first_cycle,
    split_nearly_regular,
    to_enriched_cycles,
    to_nearly_regular,
)
from permroot.counting import count_reg
from permroot.errors import DomainError
from permroot.families import (
    FamilySpec,
    enumerate_enriched_cycles,
    enumerate_family,
    enumerate_regular_on,
)
from permroot.permutation import Permutation, parse


class TestExtractInsert:
    def test_worked_example_case3(self, P):
        x, rest = extract_element(P("(1 8 2 5) (3) (4) (6 7)"), 3)
        assert x == 5
        assert rest == P("(1 8) (2) (3) (4) (6 7)")

    def test_insert_smaller_than_everything(self, P):
        assert insert_element(2, P("(3) (4) (6 7)"), 3) == P("(2) (3) (4) (6 7)")

    def test_singleton(self):
        x, rest = extract_element(parse("(1)"), 2)
        assert x == 1 and rest == Permutation()
        assert insert_element(1, Permutation(), 2) == parse("(1)")

    def test_case2_two_cycle(self, P):
        assert extract_element(P("(5 6)"), 3) == (6, P("(5)"))

    def test_worked_example_r2(self, P):
        x, rest = extract_element(P("(5 10 8) (7) (9)"), 2)
        assert x == 8
        assert rest == P("(5) (7 9 10)")

    def test_preconditions(self, P):
        with pytest.raises(DomainError):
            extract_element(Permutation(), 2)
        with pytest.raises(DomainError):
            extract_element(P("(1 2)"), 2)  # size multiple of r
        with pytest.raises(DomainError):
            extract_element(P("(1 2) (3)"), 2)  # not regular
        with pytest.raises(DomainError):
            insert_element(1, P("(2)"), 2)  # size+1 multiple of r
        with pytest.raises(DomainError):
            insert_element(2, P("(2 3)"), 3)  # collision

    @pytest.mark.parametrize("r,n", [(2, 5), (3, 5), (4, 6)])
    def test_roundtrip_exhaustive(self, r, n):
        for sigma in enumerate_family(FamilySpec.regular(r, n)):
            x, rest = extract_element(sigma, r)
            assert insert_element(x, rest, r) == sigma

    def test_roundtrip_on_subsets(self):
        for size in (1, 2, 4):
            for subset in itertools.combinations(range(1, 8), size):
                for sigma in enumerate_regular_on(subset, 3):
                    x, rest = extract_element(sigma, 3)
                    assert insert_element(x, rest, 3) == sigma

    @given(
        st.integers(2, 4),
        st.lists(st.integers(1, 20), min_size=1, max_size=8, unique=True).flatmap(
            lambda elems: st.permutations(elems).map(
                lambda images: Permutation.from_one_line(sorted(elems), images)
            )
        ),
    )
    @settings(max_examples=150, deadline=None)
    def test_roundtrip_random_regular(self, r, sigma):
        assume(sigma.size % r != 0)
        assume(all(len(c) % r != 0 for c in sigma.cycles))
        x, rest = extract_element(sigma, r)
        assert insert_element(x, rest, r) == sigma


class TestGrowShrink:
    def test_worked_examples(self, P):
        assert grow_first_cycle(P("(3) (5 6)"), 3) == P("(3 6) (5)")
        assert grow_first_cycle(P("(3 6) (5)"), 3) == P("(3 6 5)")
        assert shrink_first_cycle(P("(3 6) (5)"), 3) == P("(3) (5 6)")
        assert shrink_first_cycle(P("(3 6 5)"), 3) == P("(3 6) (5)")

    def test_even_odd_example(self, P):
        sigma = P("(1 2 3 4 6) (5 10 8) (7) (9)")
        image = grow_first_cycle(sigma, 2)
        assert image == P("(1 2 3 4 6 8) (5) (7 9 10)")
        assert shrink_first_cycle(image, 2) == sigma

    def test_preconditions(self, P):
        with pytest.raises(DomainError):
            grow_first_cycle(P("(1) (2) (3 4)"), 3)  # n-k multiple of r
        with pytest.raises(DomainError):
            grow_first_cycle(P("(1 2) (3 4 5) (6)"), 3)  # rest not regular
        with pytest.raises(DomainError):
            shrink_first_cycle(P("(1) (2) (3)"), 2)  # first cycle too short

    def test_roundtrip_exhaustive_q22(self):
        # every permutation of [n<=6] with regular non-first cycles, r=2
        for n in range(1, 7):
            for p in enumerate_family(FamilySpec.everything(n)):
                lengths = p.cycle_lengths()
                if any(l % 2 == 0 for l in lengths[1:]):
                    continue
                if (n - lengths[0]) % 2 == 0:
                    continue
                assert shrink_first_cycle(grow_first_cycle(p, 2), 2) == p


class TestNearlyRegular:
    def test_worked_examples(self, P):
        assert str(to_nearly_regular(P("(3) (5 6)"), 3)) == "(3 6 5)_1"
        tau = to_nearly_regular(P("(1 2) (3 4) (5 6)"), 3)
        assert str(tau) == "(1 2 4)_2 (3) (5 6)"
        assert from_nearly_regular(tau) == P("(1 2) (3 4) (5 6)")

    def test_inverse_examples(self):
        assert from_nearly_regular(parse("(3 6 5)_1", r=3)) == parse("(3) (5 6)")
        assert from_nearly_regular(parse("(1 2 4)_2 (3) (5 6)", r=3)) == parse(
            "(1 2) (3 4) (5 6)"
        )

    def test_length_law_exhaustive_reg_3_6(self):
        for sigma in enumerate_family(FamilySpec.regular(3, 6)):
            first = len(sigma.cycles[0])
            tau = to_nearly_regular(sigma, 3)
            assert len(tau.base.cycles[0]) == first - first % 3 + 3
            assert tau.color_seq[0] == first % 3
            assert from_nearly_regular(tau) == sigma

    def test_split_helper(self):
        tau = parse("(1 2 4)_2 (3) (5 6)", r=3)
        colored, rest = split_nearly_regular(tau)
        assert colored.cycle == (1, 2, 4)
        assert colored.color == 2
        assert rest == parse("(3) (5 6)")

    def test_rejects_wrong_shapes(self, P):
        with pytest.raises(DomainError):
            to_nearly_regular(P("(1 2) (3 4)"), 3)  # size not multiple of r
        with pytest.raises(DomainError):
            to_nearly_regular(P("(1 2 3) (4 5 6)"), 3)  # not regular
        with pytest.raises(DomainError):
            from_nearly_regular(parse("(1 2 3)_1 (4 5 6)_2", r=3))  # two colored


class TestEnrichedCycles:
    def test_worked_example(self, P):
        tau = to_enriched_cycles(P("(1 2) (3 4) (5 6)"), 3)
        assert str(tau) == "(1 2 4)_2 (3 6 5)_1"
        assert from_enriched_cycles(tau) == P("(1 2) (3 4) (5 6)")

    def test_empty(self):
        tau = to_enriched_cycles(Permutation(), 3)
        assert tau.base == Permutation()
        assert from_enriched_cycles(tau) == Permutation()

    def test_single_colored_two_cycle(self):
        # Reg_2(2) = {(1)(2)}, so the only preimage of any colored pair is it
        sigma = from_enriched_cycles(parse("(1 2)_1", r=2))
        assert sigma == Permutation.identity([1, 2])
        assert to_enriched_cycles(sigma, 2) == parse("(1 2)_1", r=2)

    def test_bijection_reg_3_6(self):
        image = set()
        for sigma in enumerate_family(FamilySpec.regular(3, 6)):
            tau = to_enriched_cycles(sigma, 3)
            assert all(len(c) % 3 == 0 for c in tau.base.cycles)
            assert from_enriched_cycles(tau) == sigma
            image.add(tau)
        assert len(image) == 400 == count_reg(3, 6)
        codomain = set(enumerate_enriched_cycles(3, 6))
        assert image == codomain

    def test_inverse_roundtrip_enriched_2_6(self):
        for tau in enumerate_enriched_cycles(2, 6):
            assert to_enriched_cycles(from_enriched_cycles(tau), 2) == tau


class TestExtendRegular:
    def test_base_case(self):
        assert extend_regular(Permutation(), 1, 2) == parse("(1)")

    def test_surjective_reg_2_3(self):
        outputs = set()
        for sigma in enumerate_family(FamilySpec.regular(2, 2)):
            for j in (1, 2, 3):
                outputs.add(extend_regular(sigma, j, 2))
        assert outputs == set(enumerate_family(FamilySpec.regular(2, 3)))
        assert len(outputs) == 3

    def test_surjective_reg_3_2(self):
        outputs = {extend_regular(parse("(1)"), j, 3) for j in (1, 2)}
        assert outputs == set(enumerate_family(FamilySpec.regular(3, 2)))

    def test_modulus_precondition(self, P):
        with pytest.raises(DomainError):
            extend_regular(P("(1)"), 1, 2)  # n+1 = 2 is a multiple of 2


class TestMergeCycleClass:
    def test_two_by_two(self):
        assert merge_cycle_class([(1, 2), (3, 4)], [3]) == (1, 2, 3, 4)
        assert merge_cycle_class([(1, 2), (3, 4)], [4]) == (1, 2, 4, 3)

    def test_three_breaks_three_outputs(self):
        outputs = {
            merge_cycle_class([(1, 2, 3), (4, 5, 6)], [bp]) for bp in (4, 5, 6)
        }
        assert len(outputs) == 3
        assert all(len(c) == 6 for c in outputs)

    def test_validation(self):
        with pytest.raises(DomainError):
            merge_cycle_class([(1, 2)], [])
        with pytest.raises(DomainError):
            merge_cycle_class([(1, 2), (3, 4, 5)], [3])
        with pytest.raises(DomainError):
            merge_cycle_class([(1, 2), (3, 4)], [9])

    def test_injective_over_classes_from_uniform_family(self):
        # all classes drawn from permutations with two 2-cycles on [4]
        outputs = set()
        expected = 0
        for pi in enumerate_family(FamilySpec.uniform_multiples(2, 2, 4)):
            expected += 2
            for bp in pi.cycles[1]:
                outputs.add(merge_cycle_class(pi.cycles, [bp]))
        assert len(outputs) == expected == 6
