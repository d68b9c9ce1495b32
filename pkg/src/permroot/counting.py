"""Exact counts and probabilities for the permutation families.

Everything here is arbitrary-precision integer or reduced-rational
arithmetic; no floating point on any path.  Each family is counted
redundantly (closed formula, recurrence, dynamic programming over cycle
types, and at small sizes enumeration) so the routes can be checked against
one another.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import DomainError
from .families import DEFAULT_ENUMERATION_BOUND, FamilySpec, enumerate_family
from .permutation import CycleType
from .roots import brute_force_root_table, prime_power_decomposition

ORACLE_COUNT_BOUND = 7

_METHODS = ("formula", "recurrence", "enumerate")


def falling_factorial(x: int, m: int) -> int:
    """x (x-1) ... (x-m+1); the empty product for m = 0."""
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"falling factorial needs m >= 0, got {m!r}")
    out = 1
    for j in range(m):
        out *= x - j
    return out


def double_factorial(k: int) -> int:
    """k (k-2) (k-4) ... down to 1 or 2; defined as 1 for k in {-1, 0}."""
    if not isinstance(k, int) or k < -1:
        raise DomainError(f"double factorial needs k >= -1, got {k!r}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def count_of_type(rho: CycleType) -> int:
    """Number of permutations of a fixed |rho|-element set with cycle type rho."""
    out = factorial(rho.total)
    for length, count in rho.pairs:
        out = _exact_div(out, length**count * factorial(count))
    return out


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def _check_modulus(value: int, name: str) -> None:
    if not isinstance(value, int) or value < 2:
        raise DomainError(f"{name} must be an integer >= 2, got {value!r}")


def _check_params(r: int, n: int) -> None:
    _check_modulus(r, "r")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise DomainError(f"unknown method {method!r}; options: {', '.join(_METHODS)}")


def _enumerated_count(spec: FamilySpec, bound: int) -> int:
    return sum(1 for _ in enumerate_family(spec, bound))


def count_reg(
    r: int,
    n: int,
    method: str = "formula",
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> int:
    """|Reg_r(n)|, the number of permutations of [n] with no cycle length
    divisible by r; 1 for n = 0."""
    _check_params(r, n)
    _check_method(method)
    if method == "enumerate":
        return _enumerated_count(FamilySpec.regular(r, n), bound)
    if method == "recurrence":
        return _reg_recurrence(r, n)
    m = n // r
    num = factorial(n)
    for k in range(1, m + 1):
        num *= k * r - 1
    return _exact_div(num, r**m * factorial(m))


def _reg_recurrence(r: int, n: int) -> int:
    # |Reg_r(rm)| = (rm-1) (rm-1)_{r-1} |Reg_r(rm-r)|, then one partial step
    # |Reg_r(rm+d)| = (rm+d)_d |Reg_r(rm)| for 0 < d < r
    value = 1
    size = 0
    while size + r <= n:
        size += r
        value *= (size - 1) * falling_factorial(size - 1, r - 1)
    if size < n:
        value *= falling_factorial(n, n - size)
    return value


def count_cyc(
    r: int,
    n: int,
    method: str = "formula",
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> int:
    """|Cyc_r(n)|, the number of permutations of [n] with every cycle length
    divisible by r; zero unless r divides n, and 1 for n = 0."""
    _check_params(r, n)
    _check_method(method)
    if method == "enumerate":
        return _enumerated_count(FamilySpec.cycle(r, n), bound)
    if n % r != 0:
        return 0
    m = n // r
    if method == "recurrence":
        value = 1
        for j in range(1, m + 1):
            value *= falling_factorial(j * r - 1, r - 1) * (j * r - r + 1)
        return value
    num = factorial(n)
    for k in range(1, m):
        num *= 1 + k * r
    return _exact_div(num, r**m * factorial(m))


# -- dynamic programming over cycle types --------------------------------------

def _cycle_arrangements(j: int, length: int) -> int:
    """Ways to arrange j unordered cycles of the given length on a fixed set
    of j*length elements."""
    return _exact_div(factorial(j * length), length**j * factorial(j))


def _type_dp(n: int, length_specs) -> list[int]:
    """Count permutations by admissible cycle types.

    ``length_specs`` yields (length, step, weight): multiplicities of that
    cycle length are restricted to multiples of ``step`` and each cycle
    contributes a factor ``weight``.  Lengths not listed are forbidden.
    Returns dp where dp[u] counts weighted permutations of a u-element set.
    """
    dp = [0] * (n + 1)
    dp[0] = 1
    for length, step, weight in length_specs:
        new = dp[:]
        for used in range(n + 1):
            if not dp[used]:
                continue
            j = step
            while used + j * length <= n:
                new[used + j * length] += (
                    dp[used]
                    * comb(used + j * length, j * length)
                    * _cycle_arrangements(j, length)
                    * weight**j
                )
                j += step
        dp = new
    return dp


def count_enriched_cyc(r: int, n: int) -> int:
    """|Cyc*_r(n)|: r-cycle permutations of [n] with each cycle colored by
    one of r-1 colors.  Equals |Reg_r(n)| when r divides n."""
    _check_params(r, n)
    if n == 0:
        return 1
    if n % r != 0:
        raise DomainError(f"n={n} is not a multiple of r={r}")
    specs = [(length, 1, r - 1) for length in range(r, n + 1, r)]
    return _type_dp(n, specs)[n]


def count_cyc_qr(q: int, r: int, n: int) -> int:
    """|Cyc_{q,r}(n)|: permutations of [n] where every cycle length is a
    multiple of q and every length occurs a multiple of r times."""
    _check_modulus(q, "q")
    _check_params(r, n)
    if n == 0:
        return 1
    if n % (q * r) != 0:
        return 0
    specs = [(length, r, 1) for length in range(q, n + 1, q)]
    return _type_dp(n, specs)[n]


def count_q_family(r: int, k: int, n: int) -> int:
    """|Q_{r,k}(n)|: permutations of [n] whose cycle containing 1 has length
    exactly k, all other cycles r-regular."""
    _check_params(r, n)
    if not isinstance(k, int) or not 1 <= k <= n:
        raise DomainError(f"k must lie in 1..{n}, got {k!r}")
    return falling_factorial(n - 1, k - 1) * count_reg(r, n - k)


def count_AP(n: int, k: int, parity: str) -> int:
    """|A_{n,2k-1}| (parity "odd": all cycles odd, 1 in a (2k-1)-cycle) or
    |P_{n,2k}| (parity "even": 1 in a 2k-cycle, all other cycles odd)."""
    if parity not in ("odd", "even"):
        raise DomainError(f"parity must be 'odd' or 'even', got {parity!r}")
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    j = 2 * k - 1 if parity == "odd" else 2 * k
    if not isinstance(n, int) or n < j:
        raise DomainError(f"need n >= {j} for a first cycle of length {j}")
    m = n - j
    if m % 2 == 0:
        return _exact_div(factorial(n - 1), factorial(m)) * double_factorial(m - 1) ** 2
    return _exact_div(factorial(n - 1), factorial(m - 1)) * double_factorial(m - 2) ** 2


def count_S_rho_q(rho: CycleType, q: int, n: int) -> int:
    """|S_{rho,q}(n)|: permutations of [n] whose q-singular part has cycle
    type rho; the q-regular remainder is free."""
    _check_modulus(q, "q")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if any(ln % q != 0 for ln in rho.lengths()):
        raise DomainError(f"type {rho} contains a q-regular length (q={q})")
    if rho.total > n:
        raise DomainError(f"|rho|={rho.total} exceeds n={n}")
    return comb(n, rho.total) * count_of_type(rho) * count_reg(q, n - rho.total)


# -- root counting --------------------------------------------------------------

def root_count_sequence(r: int, upto: int) -> list[int]:
    """|S_n^r| for n = 0..upto, prime powers r only (single DP pass)."""
    decomposition = prime_power_decomposition(r)
    if decomposition is None:
        raise DomainError(f"r={r} is not a prime power; use count_roots for n <= {ORACLE_COUNT_BOUND}")
    q, _ = decomposition
    specs = [
        (length, r if length % q == 0 else 1, 1) for length in range(1, upto + 1)
    ]
    return _type_dp(upto, specs)


def count_roots(r: int, n: int) -> int:
    """|S_n^r|, the number of permutations of [n] having an r-th root.

    Prime powers are counted exactly for any n by restricting cycle-type
    multiplicities; other r fall back to the brute-force oracle and are
    limited to n <= ORACLE_COUNT_BOUND.
    """
    _check_params(r, n)
    if prime_power_decomposition(r) is not None:
        return root_count_sequence(r, n)[n]
    if n > ORACLE_COUNT_BOUND:
        raise DomainError(
            f"r={r} is not a prime power; exact counting is limited to n <= {ORACLE_COUNT_BOUND}"
        )
    return len(brute_force_root_table(n, r))


def prob_root(r: int, n: int) -> Fraction:
    """p_r(n) = |S_n^r| / n! in lowest terms."""
    return Fraction(count_roots(r, n), factorial(n))


def regular_proportion_product(r: int, n: int) -> Fraction:
    """The product over k = 1..floor(n/r) of (rk-1)/(rk); equals the
    proportion |Reg_r(n)| / n!."""
    _check_params(r, n)
    if n < 1:
        raise DomainError("the proportion is defined for n >= 1")
    out = Fraction(1)
    for k in range(1, n // r + 1):
        out *= Fraction(k * r - 1, k * r)
    return out
