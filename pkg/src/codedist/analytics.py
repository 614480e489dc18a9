"""Exact counts and threshold predicates for codes over GF(q).

Everything here is integer arithmetic; Python ints are arbitrary precision,
so no separate big-number type is needed.
"""

from __future__ import annotations

from math import comb


def q_integer(n: int, q: int) -> int:
    """[n]_q = (q^n - 1)/(q - 1), the number of points of PG(n-1, q)."""
    if n < 0:
        raise ValueError(f"n={n} must be nonnegative")
    return sum(q**i for i in range(n))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (product formula)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0, f"non-integral Gaussian coefficient for n={n}, k={k}, q={q}"
    return value


def count_nondegenerate(n: int, k: int, q: int) -> int:
    """Number of k-subspaces of F_q^n lying in no coordinate hyperplane.

    Inclusion-exclusion over the set of coordinates forced to vanish.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    total = sum((-1) ** i * comb(n, i) * gaussian_binomial(n - i, k, q) for i in range(n - k + 1))
    assert total >= 0
    return total


def theorem1_predicate(n: int, k: int, q: int) -> bool:
    """n < (q+1)^2 + k - 2: below this length every pair has d_c = d."""
    return n < (q + 1) ** 2 + k - 2


def theorem2_bound(k: int, m: int, q: int) -> int:
    """Smallest length admitting a pair with meet dimension m and d_c = d + 1."""
    if m > k - 2:
        raise ValueError(f"need m <= k-2, got m={m}, k={k}")
    if m < 0:
        raise ValueError(f"m={m} must be nonnegative")
    return q_integer(k - m, q) * (q + 1) + m


def lemma3_check(k: int, q: int) -> bool:
    """[k-m]_q (q+1) + m >= (q+1)^2 + k - 2 for every m in 0..k-2."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    rhs = (q + 1) ** 2 + k - 2
    return all(theorem2_bound(k, m, q) >= rhs for m in range(k - 1))
