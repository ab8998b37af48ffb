"""Monic irreducibles over F_q: enumeration, counting, and degree sums.

Counting uses the Moebius-inverted formula N_d = (1/d) sum_{e|d} mu(e) q^(d/e).
The degree sum dsum(n) = sum_{d<=n} d*N_d is the degree of the product of all
monic irreducibles of degree <= n and always lies in [q^n, 2*q^n).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BudgetExceeded
from .factor import is_irreducible
from .poly import Poly, monic_polys_of_degree

DEFAULT_DEGREE_BUDGET = 1 << 14


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    res = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            res = -res
        d += 1 if d == 2 else 2
    if n > 1:
        res = -res
    return res


@lru_cache(maxsize=None)
def count_irreducibles(q: int, d: int) -> int:
    """Number of monic irreducibles of degree d over F_q."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    total = sum(_mobius(e) * q ** (d // e) for e in _divisors(d))
    assert total % d == 0
    return total // d


@lru_cache(maxsize=None)
def enumerate_monic_irreducibles(field, d: int) -> tuple[Poly, ...]:
    """All monic irreducibles of degree d, in canonical order."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return tuple(p for p in monic_polys_of_degree(field, d) if is_irreducible(p))


def degree_sum(q: int, n: int) -> int:
    """Degree of the product of all monic irreducibles of degree <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(d * count_irreducibles(q, d) for d in range(1, n + 1))


@lru_cache(maxsize=None)
def irreducible_product(field, n: int) -> Poly:
    """Product of all monic irreducibles of degree <= n (1 when n <= 0)."""
    if n <= 0:
        return Poly.one(field)
    prev = irreducible_product(field, n - 1)
    for p in enumerate_monic_irreducibles(field, n):
        prev = prev * p
    return prev


def product_identity_check(field, n: int,
                           budget: int = DEFAULT_DEGREE_BUDGET) -> bool:
    """Whether prod over d|n of the monic irreducibles of degree d equals
    t^(q^n) - t, compared coefficientwise."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = field.q
    if q ** n > budget:
        raise BudgetExceeded(
            "identity at n=%d materializes degree %d > budget %d"
            % (n, q ** n, budget))
    lhs = Poly.one(field)
    for d in _divisors(n):
        for p in enumerate_monic_irreducibles(field, d):
            lhs = lhs * p
    t = Poly.gen(field)
    rhs = t ** (q ** n) - t
    return lhs == rhs
