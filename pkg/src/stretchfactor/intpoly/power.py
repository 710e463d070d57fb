"""Polynomials whose roots are the k-th powers of the roots of a monic integer polynomial."""

from __future__ import annotations

from ..errors import DegenerateInput, OutOfRange
from .poly import IntPoly


def power_sums(p: IntPoly, count: int) -> list[int]:
    """Power sums ``s_0 .. s_count`` of the roots of monic ``p`` via Newton's identities."""
    if not p.is_monic():
        raise DegenerateInput("power sums need a monic polynomial")
    n = p.degree
    # elementary symmetric functions e_i = (-1)**i * a_{n-i}
    e = [1] + [(-1) ** i * p[n - i] for i in range(1, n + 1)]
    s = [n]
    for m in range(1, count + 1):
        acc = 0
        for i in range(1, min(m, n) + 1):
            term = e[i] * (s[m - i] if i < m else m)
            acc += term if i % 2 else -term
        s.append(acc)
    return s


def from_power_sums(sums: list[int], n: int) -> IntPoly:
    """Monic degree-``n`` polynomial with the given power sums ``sums[1..n]``."""
    e = [1]
    for j in range(1, n + 1):
        acc = 0
        for i in range(1, j + 1):
            term = e[j - i] * sums[i]
            acc += term if i % 2 else -term
        q, r = divmod(acc, j)
        if r:
            raise ArithmeticError("power sums are not those of an integer polynomial")
        e.append(q)
    return IntPoly((-1) ** (n - i) * e[n - i] for i in range(n + 1))


def power_min_poly(p: IntPoly, k: int) -> IntPoly:
    """``prod (x - r**k)`` over the roots ``r`` of monic ``p``, with multiplicity."""
    if k < 1:
        raise OutOfRange(f"exponent must be >= 1, got {k}")
    if not p.is_monic():
        raise DegenerateInput("power_min_poly needs a monic polynomial")
    n = p.degree
    if k == 1 or n == 0:
        return p
    s = power_sums(p, n * k)
    return from_power_sums([s[j * k] for j in range(n + 1)], n)
