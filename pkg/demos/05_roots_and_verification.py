#!/usr/bin/env python3
"""Root existence, brute-force witnesses, and the verification suites.

The cycle-type criterion answers root existence instantly; the brute-force
search is the independent oracle it is validated against (exhaustively for
n <= 7 in the test suite).  The named verification suites re-run all of
those checks and emit machine-readable reports.
"""

from permroot import (
    cross_check,
    count_reg,
    count_roots,
    fetch,
    find_root_bruteforce,
    has_root_general,
    has_root_prime_power,
    parse,
    run_suite,
)

print("== criterion vs witness ==")
sigma = parse("(1 2 3 4) (5 6 7 8)")
print(f"sigma = {sigma}")
print(f"has a square root?  criterion: {has_root_prime_power(sigma, 2, 1)}")
witness = find_root_bruteforce(sigma, 2)
print(f"least witness: {witness}; its square: {witness.power(2)}")

print()
one_swap = parse("(1 2)")
print(f"{one_swap}: square root exists? {has_root_general(one_swap, 2)} "
      f"(a single transposition has none)")
two_swaps = parse("(1 2) (3 4)")
print(f"{two_swaps}: square root? {has_root_general(two_swaps, 2)}, "
      f"fourth root? {has_root_general(two_swaps, 4)}")

print()
print("== verification suites ==")
for suite in ("tables", "monotonicity", "inequalities"):
    for report in run_suite(suite):
        print(f"  {report.status.upper():4s} {report.property_id} "
              f"({report.counts_checked} instances)")

print()
print("== a single exhaustive bijection check ==")
for report in run_suite("phi-bijection", {"r": 3, "n": 2}):
    print(f"  {report.status.upper():4s} {report.property_id} "
          f"r=3 rn=6 ({report.counts_checked} permutations)")

print()
print("== offline OEIS cross-checks ==")
square = cross_check(fetch("A247005"), lambda n: count_roots(2, n), 12)
double = cross_check(fetch("A001818"), lambda n: count_reg(2, 2 * n), 10)
for report in (square, double):
    print(f"  {report.status.upper():4s} {report.property_id} "
          f"({report.counts_checked} terms)")
