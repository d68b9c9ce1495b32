#!/usr/bin/env python3
"""Tour of the core permutation type: cycle notation, powers, cycle types.

Permutations live on arbitrary finite sets of positive integers and are
always kept in canonical form: each cycle starts at its smallest element
and cycles are listed by increasing minima.
"""

from permroot import parse

print("== parsing and canonical form ==")
p = parse("(2 1)")
print(f'parse("(2 1)")            -> {p}')

p = parse("(5 6) (3)")
print(f'parse("(5 6) (3)")        -> {p}   (cycles sorted by minima)')

empty = parse("")
print(f'parse("")                 -> {empty!r} (the empty permutation)')

print()
print("== enriched permutations: colored singular cycles ==")
# For a modulus r, cycles whose length is divisible by r are "singular" and
# carry a color between 1 and r-1; all other cycles stay bare.
e = parse("(1 2 4)_2 (3) (5 6)", r=3)
print(f'parse("(1 2 4)_2 (3) (5 6)", r=3) -> {e}')
print(f"  colors by cycle index: {e.colors()}")
print(f"  JSON form: {e.to_json_dict()}")

print()
print("== powers ==")
pi = parse("(1 5 2 6 3 7 4 8)")
print(f"pi            = {pi}")
print(f"pi^2          = {pi.power(2)}   (so pi is a square root of it)")
print(f"pi^8          = {pi.power(8)}   (back to the identity)")

print()
print("== cycle type and splitting by a modulus ==")
sigma = parse("(1 2) (3 4) (5 9 7 8) (6 10 11 13) (12)")
print(f"sigma         = {sigma}")
print(f"cycle type    = {sigma.cycle_type()}")
regular, singular = sigma.split_parts(2)
print(f"2-regular part  = {regular}")
print(f"2-singular part = {singular}  (type {singular.cycle_type()})")
