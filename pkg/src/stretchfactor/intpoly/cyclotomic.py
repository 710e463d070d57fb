"""Cyclotomic polynomials and exhaustive cyclotomic-factor detection."""

from __future__ import annotations

from functools import lru_cache

from ..errors import DegenerateInput, OutOfRange
from .poly import IntPoly, divexact


def totient(m: int) -> int:
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by dividing ``x**m - 1`` by every proper-divisor factor."""
    if m < 1:
        raise OutOfRange(f"cyclotomic index must be >= 1, got {m}")
    p = IntPoly.monomial(m) - 1
    for d in _divisors(m)[:-1]:
        p = divexact(p, cyclotomic(d))
    return p


def cyclotomic_search_bound(degree: int) -> int:
    """Every m with totient(m) <= degree satisfies m <= 2 * degree**2."""
    return 2 * degree * degree


def cyclotomic_factors(p: IntPoly) -> list[int]:
    """All m such that the m-th cyclotomic polynomial divides ``p``, in increasing order."""
    if p.is_zero():
        raise DegenerateInput("cyclotomic factors of the zero polynomial")
    d = p.degree
    out = []
    for m in range(1, cyclotomic_search_bound(d) + 1):
        if totient(m) > d:
            continue
        if (p % cyclotomic(m)).is_zero():
            out.append(m)
    return out


def strip_cyclotomic(p: IntPoly) -> tuple[IntPoly, list[tuple[int, int]]]:
    """Divide out every cyclotomic factor with full multiplicity.

    Returns the cofactor and the ``(m, multiplicity)`` pairs removed.
    """
    removed = []
    for m in cyclotomic_factors(p):
        phi = cyclotomic(m)
        e = 0
        while p.degree >= phi.degree and (p % phi).is_zero():
            p = divexact(p, phi)
            e += 1
        removed.append((m, e))
    return p, removed
