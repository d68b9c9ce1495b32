import itertools

import pytest

from permroot.errors import DomainError
from permroot.families import FamilySpec, enumerate_family
from permroot.permutation import Permutation, parse_cycle_type
from permroot.roots import (
    RootQuery,
    brute_force_root_table,
    bunch_sizes,
    find_root_bruteforce,
    has_root_general,
    has_root_prime_power,
    is_qr_divisible,
    prime_power_decomposition,
)


class TestPrimePowerCriterion:
    def test_square_permutation_example(self, P):
        assert has_root_prime_power(P("(1 2 3 4) (5 6 7 8)"), 2, 1)

    def test_identity_always_passes(self):
        ident = Permutation.identity(range(1, 6))
        for q, l in ((2, 1), (2, 2), (3, 1), (5, 1)):
            assert has_root_prime_power(ident, q, l)

    def test_single_transposition_fails(self, P):
        assert not has_root_prime_power(P("(1 2)"), 2, 1)
        assert find_root_bruteforce(P("(1 2)"), 2) is None

    def test_q_must_be_prime(self, P):
        with pytest.raises(DomainError):
            has_root_prime_power(P("(1 2)"), 4, 1)

    def test_fourth_root_needs_multiplicity_four(self, P):
        # two 2-cycles have a square root but no fourth root
        sigma = P("(1 2) (3 4)")
        assert has_root_prime_power(sigma, 2, 1)
        assert not has_root_prime_power(sigma, 2, 2)
        assert find_root_bruteforce(sigma, 4) is None


class TestGeneralCriterion:
    def test_bunch_sizes_prime(self):
        assert bunch_sizes(1, 3) == (1, 3)
        assert bunch_sizes(3, 3) == (3,)
        assert bunch_sizes(2, 3) == (1, 3)

    def test_matches_prime_power_criterion(self):
        for n in range(0, 8):
            for lengths in _partitions(n):
                p = _representative(lengths)
                for r in (2, 3, 4, 5, 7, 8, 9):
                    q, l = prime_power_decomposition(r)
                    assert has_root_general(p, r) == has_root_prime_power(p, q, l)

    @pytest.mark.parametrize("n", range(0, 6))
    @pytest.mark.parametrize("r", range(2, 10))
    def test_oracle_equivalence_small(self, n, r):
        table = brute_force_root_table(n, r)
        for img in itertools.permutations(range(1, n + 1)):
            p = Permutation.from_one_line(range(1, n + 1), img)
            assert has_root_general(p, r) == (img in table)

    def test_sixth_root_counts(self):
        assert len(brute_force_root_table(4, 6)) == 4
        assert len(brute_force_root_table(5, 6)) == 40


class TestBruteForce:
    def test_witness_squares_back(self, P):
        sigma = P("(1 2 3 4) (5 6 7 8)")
        witness = find_root_bruteforce(sigma, 2)
        assert witness is not None
        assert witness.power(2) == sigma

    def test_least_witness_is_identity_for_identity(self):
        ident = Permutation.identity([1, 2, 3])
        assert find_root_bruteforce(ident, 5) == ident

    def test_bound(self):
        with pytest.raises(DomainError):
            find_root_bruteforce(Permutation.identity(range(1, 10)), 2)
        with pytest.raises(DomainError):
            brute_force_root_table(9, 2)

    def test_arbitrary_ground_set(self, P):
        sigma = P("(3 5) (6 9)")
        witness = find_root_bruteforce(sigma, 2)
        assert witness is not None and witness.power(2) == sigma


class TestQrDivisible:
    def test_empty_type(self):
        assert is_qr_divisible(parse_cycle_type(""), 2, 2)

    def test_examples(self):
        assert is_qr_divisible(parse_cycle_type("2^2,4^2"), 2, 2)
        assert not is_qr_divisible(parse_cycle_type("2^1"), 2, 2)
        assert not is_qr_divisible(parse_cycle_type("3^2"), 2, 2)

    def test_bad_parameters(self):
        with pytest.raises(DomainError):
            is_qr_divisible(parse_cycle_type("2^2"), 1, 2)


class TestRegularInclusion:
    @pytest.mark.parametrize("q,l", [(2, 1), (2, 2), (3, 1), (3, 2)])
    def test_regular_subset_of_roots(self, q, l):
        for n in range(0, 7):
            for sigma in enumerate_family(FamilySpec.regular(q, n)):
                assert has_root_prime_power(sigma, q, l)


class TestRootQuery:
    def test_factorization_attached(self, P):
        query = RootQuery.make(P("(1 2)"), 8)
        assert query.factorization == (2, 3)
        assert RootQuery.make(P("(1 2)"), 6).factorization is None

    def test_rejects_bad_degree(self, P):
        with pytest.raises(DomainError):
            RootQuery.make(P("(1 2)"), 1)


def _partitions(total):
    def rec(remaining, max_part, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min(remaining, max_part), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()
    yield from rec(total, total, [])


def _representative(lengths):
    cycles = []
    start = 1
    for ln in lengths:
        cycles.append(tuple(range(start, start + ln)))
        start += ln
    return Permutation(cycles)
