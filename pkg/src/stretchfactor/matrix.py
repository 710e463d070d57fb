"""Small exact linear-algebra kernels over Z and Q (lists of lists)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .intpoly import IntPoly

Matrix = Sequence[Sequence]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix) -> list[list]:
    return [list(r) for r in zip(*a)]


def charpoly_coeffs(a: Matrix) -> list:
    """Coefficients of ``det(xI - A)``, ascending, by Berkowitz's division-free algorithm.

    Works over any commutative ring whose elements support ``+``, ``-`` and ``*``.
    """
    n = len(a)
    poly = [1]  # descending coefficients of the leading k x k block
    for k in range(n):
        akk = a[k][k]
        col = [a[i][k] for i in range(k)]
        row = a[k][:k]
        # Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
        t = [1, -akk]
        vec = col
        for _ in range(k):
            t.append(-sum(r * v for r, v in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        new = []
        for i in range(k + 2):
            new.append(sum(t[i - j] * poly[j] for j in range(min(i, k) + 1) if i - j < len(t)))
        poly = new
    return poly[::-1]


def charpoly(a: Matrix) -> IntPoly:
    """Characteristic polynomial of an integer matrix."""
    return IntPoly(int(c) for c in charpoly_coeffs(a))


def rational_charpoly(a: Matrix) -> IntPoly:
    """Primitive integer multiple of the characteristic polynomial of a rational matrix."""
    coeffs = [Fraction(c) for c in charpoly_coeffs([[Fraction(x) for x in row] for row in a])]
    return _clear_denominators(coeffs)


def _clear_denominators(coeffs: Sequence[Fraction]) -> IntPoly:
    from math import lcm

    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return IntPoly(int(c * den) for c in coeffs).primitive()


def krylov_annihilator(a: Matrix, v: Sequence) -> IntPoly:
    """Minimal polynomial of ``A`` relative to ``v``: the least-degree ``q`` with ``q(A) v = 0``.

    Built from the first linear dependency among ``v, Av, A^2 v, ...``, found by
    exact fraction elimination. Returned as a primitive integer polynomial.
    """
    n = len(a)
    basis: list[tuple[list[Fraction], list[Fraction], int]] = []  # (reduced vector, combination, pivot)
    w = [Fraction(x) for x in v]
    for k in range(n + 1):
        combo = [Fraction(0)] * (k + 1)
        combo[k] = Fraction(1)
        r = list(w)
        for vec, comb, piv in basis:
            f = r[piv]
            if f:
                r = [x - f * y for x, y in zip(r, vec)]
                combo = [x - f * (comb[i] if i < len(comb) else 0) for i, x in enumerate(combo)]
        piv = next((i for i, x in enumerate(r) if x), None)
        if piv is None:
            return _clear_denominators(combo)
        s = r[piv]
        basis.append(([x / s for x in r], [c / s for c in combo], piv))
        w = matvec(a, w)
    raise AssertionError("Krylov sequence failed to become dependent")
