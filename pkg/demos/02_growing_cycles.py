#!/usr/bin/env python3
"""The building-block bijections: extracting an element and growing the
first cycle.

``extract_element`` turns an r-regular permutation of S (|S| not a multiple
of r) into a pair (x, rest) with rest r-regular on S minus x;
``insert_element`` reverses it by appending x to the first cycle.  On top of
them, ``grow_first_cycle`` moves one element from the regular remainder to
the end of the cycle containing the minimum.
"""

from permroot import (
    extend_regular,
    extract_element,
    grow_first_cycle,
    insert_element,
    parse,
    shrink_first_cycle,
)

print("== extract / insert (r = 3) ==")
sigma = parse("(1 8 2 5) (3) (4) (6 7)")
print(f"sigma = {sigma}")
x, rest = extract_element(sigma, 3)
print(f"extract_element(sigma, 3) = ({x}, {rest})")
print(f"insert_element({x}, rest, 3) = {insert_element(x, rest, 3)}")

print()
print("the case analysis keys on the first-cycle length modulo r:")
for text in ("(1)", "(5 6)", "(1 8 2 5) (3) (4) (6 7)"):
    p = parse(text)
    x, rest = extract_element(p, 3)
    print(f"  {str(p):28s} -> ({x}, {rest})")

print()
print("== grow / shrink the first cycle (r = 3) ==")
p = parse("(3) (5 6)")
for _ in range(2):
    q = grow_first_cycle(p, 3)
    print(f"grow {str(p):12s} -> {q}")
    assert shrink_first_cycle(q, 3) == p
    p = q

print()
print("== the same step at r = 2 sends odd-cycle to even-first families ==")
sigma = parse("(1 2 3 4 6) (5 10 8) (7) (9)")
print(f"{sigma}  ->  {grow_first_cycle(sigma, 2)}")

print()
print("== extending the ground set: Reg_r(n) x [n+1] -> Reg_r(n+1) ==")
base = parse("(1) (2)")
for j in (1, 2, 3):
    print(f"extend_regular({base}, j={j}, r=2) = {extend_regular(base, j, 2)}")
print("together the three images are exactly the odd-cycle permutations of [3]")
