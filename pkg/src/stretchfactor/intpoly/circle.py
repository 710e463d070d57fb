"""Counting roots inside, on and outside the unit circle with exact arithmetic.

Palindromic inputs go through the trace transform ``y = x + 1/x``; everything
else is split by ``gcd(p, p*)`` into a self-reciprocal part and a part with no
roots on the circle, which is handled by a Schur-Cohn recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..errors import DegenerateInput, InconclusiveError
from .poly import IntPoly, divexact, poly_gcd, squarefree_decomposition
from .roots import sturm_count


@dataclass(frozen=True)
class RootLocation:
    inside: int
    on: int
    outside: int

    def __add__(self, other: "RootLocation") -> "RootLocation":
        return RootLocation(self.inside + other.inside, self.on + other.on, self.outside + other.outside)

    def scaled(self, e: int) -> "RootLocation":
        return RootLocation(e * self.inside, e * self.on, e * self.outside)

    @property
    def total(self) -> int:
        return self.inside + self.on + self.outside

    def as_dict(self) -> dict:
        return {"inside": self.inside, "on": self.on, "outside": self.outside}


def trace_transform(p: IntPoly) -> IntPoly:
    """For palindromic ``p`` of degree ``2n`` return ``q`` with ``p(x) = x**n * q(x + 1/x)``."""
    d = p.degree
    if d % 2 or not p.is_palindromic():
        raise DegenerateInput("trace transform needs an even-degree palindromic polynomial")
    n = d // 2
    y = IntPoly.x()
    # D_j(y) = x**j + x**-j with D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}
    prev, cur = IntPoly.const(2), y
    q = IntPoly.const(p[n])
    for j in range(1, n + 1):
        q = q + cur.scale(p[n + j])
        prev, cur = cur, y * cur - prev
    return q


def inverse_trace_transform(q: IntPoly) -> IntPoly:
    """``x**deg(q) * q(x + 1/x)``, a palindromic polynomial of twice the degree."""
    n = q.degree
    x2p1 = IntPoly((1, 0, 1))
    out = IntPoly()
    for j, c in enumerate(q.coeffs):
        if c:
            out = out + (x2p1**j).shift(n - j).scale(c)
    return out


def _locate_palindromic(p: IntPoly) -> RootLocation:
    q = trace_transform(p)
    total = RootLocation(0, 0, 0)
    two = Fraction(2)
    for f, e in squarefree_decomposition(q):
        real = sturm_count(f, None, None)
        edge = (f.sign_at(2) == 0) + (f.sign_at(-2) == 0)
        # (-2, 2] minus a possible root at 2 gives the open interval
        strictly_inside = sturm_count(f, -two, two) - (f.sign_at(2) == 0)
        outside_real = real - strictly_inside - edge
        nonreal = f.degree - real
        # y in (-2, 2) or y = +-2: both x-roots on the circle.
        # y real with |y| > 2 or non-real: one x-root inside, its reciprocal outside.
        on = 2 * (strictly_inside + edge)
        off = outside_real + nonreal
        total = total + RootLocation(off, on, off).scaled(e)
    return total


def _strip_unit_roots(s: IntPoly) -> tuple[IntPoly, int]:
    """Remove every factor x - 1 and x + 1, returning the cofactor and the count removed."""
    count = 0
    for root in (1, -1):
        lin = IntPoly((-root, 1))
        while s.degree >= 1 and s(root) == 0:
            s = divexact(s, lin)
            count += 1
    return s, count


def _locate_self_reciprocal(s: IntPoly) -> RootLocation:
    s, ones = _strip_unit_roots(s)
    loc = RootLocation(0, ones, 0)
    if s.degree < 1:
        return loc
    if s.degree % 2 or not s.is_palindromic():
        raise InconclusiveError(f"expected a palindromic cofactor, got {s}")
    return loc + _locate_palindromic(s)


def _schur_cohn_inside(p: IntPoly) -> int | None:
    """Zeros of ``p`` strictly inside the unit disc, or ``None`` on a degenerate step.

    Precondition: ``p`` has no zeros on the unit circle. Uses the transform
    ``Tf = f(0) f - lc(f) f*`` with the formal degree tracked explicitly; when
    ``Tf(0) > 0`` the disc count is inherited, otherwise it is complemented.
    """
    f = list(p.coeffs)
    n = len(f) - 1
    flips = []
    while n > 0:
        a0, an = f[0], f[n]
        delta = a0 * a0 - an * an
        if delta == 0:
            return None
        g = [a0 * f[i] - an * f[n - i] for i in range(n)]
        c = gcd(*g)
        if c > 1:
            g = [v // c for v in g]
        flips.append((delta < 0, n))
        f, n = g, n - 1
    count = 0
    for complement, deg in reversed(flips):
        if complement:
            count = deg - count
    return count


def _inside_no_circle_roots(p: IntPoly) -> int:
    n = _schur_cohn_inside(p)
    if n is not None:
        return n
    # Degenerate step: squeeze the count between radii 1 - eps and 1 + eps.
    for j in range(4, 80, 4):
        eps = Fraction(1, 2**j)
        lo = _schur_cohn_inside(p.scale_variable(1 - eps))
        hi = _schur_cohn_inside(p.scale_variable(1 + eps))
        if lo is not None and lo == hi:
            return lo
    raise InconclusiveError(f"Schur-Cohn recursion degenerate for {p}")


def _locate(p: IntPoly) -> RootLocation:
    if p.degree < 1:
        return RootLocation(0, 0, 0)
    if p.degree % 2 == 0 and p.is_palindromic():
        return _locate_palindromic(p)
    s = poly_gcd(p, p.reciprocal())
    if s.degree < 1:
        inside = _inside_no_circle_roots(p)
        return RootLocation(inside, 0, p.degree - inside)
    return _locate_self_reciprocal(s) + _locate(divexact(p, s))


def unit_circle_location(p: IntPoly) -> RootLocation:
    """Exact counts, with multiplicity, of roots of modulus < 1, = 1 and > 1."""
    if p.is_zero():
        raise DegenerateInput("root location of the zero polynomial")
    if p[0] == 0:
        raise DegenerateInput("p(0) = 0; strip powers of x first")
    return _locate(p)


def outside_radius(p: IntPoly, r) -> int:
    """Number of roots of ``p`` with modulus strictly greater than the positive rational ``r``."""
    core, _ = p.strip_x()
    if core.degree < 1:
        return 0
    return unit_circle_location(core.scale_variable(r)).outside
