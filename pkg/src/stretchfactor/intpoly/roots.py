"""Real root isolation with Sturm sequences and exact real algebraic numbers."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Optional, Union

from ..errors import DegenerateInput
from .poly import IntPoly, poly_gcd, squarefree_decomposition, squarefree_part

Rational = Union[int, Fraction]
Bound = Optional[Rational]  # None stands for -inf (lower) or +inf (upper)


@lru_cache(maxsize=4096)
def sturm_chain(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm sequence of the squarefree part of ``p``, kept in Z[x].

    Remainders come from pseudo-division; the sign of ``lc**k`` is folded back
    in so every member is a positive multiple of the classical remainder.
    """
    if p.is_zero():
        raise DegenerateInput("Sturm chain of the zero polynomial")
    p = squarefree_part(p)
    chain = [p]
    if p.degree < 1:
        return tuple(chain)
    chain.append(p.derivative())
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = a.pseudo_rem(b)
        if r.is_zero():
            break
        k = a.degree - b.degree + 1
        flip = -1 if (b.lc < 0 and k % 2) else 1
        r = r.scale(-flip)
        c = r.content()
        chain.append(IntPoly(x // c for x in r.coeffs))
    return tuple(chain)


def _variations(chain: tuple[IntPoly, ...], x: Bound, upper: bool) -> int:
    signs = []
    for q in chain:
        if x is None:
            s = q.sign_at_infinity(positive=upper)
        else:
            s = q.sign_at(x)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPoly, lo: Bound, hi: Bound) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``; ``None`` bounds are infinite."""
    if p.is_zero():
        raise DegenerateInput("root count of the zero polynomial")
    if lo is not None and hi is not None and not lo < hi:
        raise DegenerateInput(f"empty interval ({lo}, {hi}]")
    chain = sturm_chain(p)
    return _variations(chain, lo, upper=False) - _variations(chain, hi, upper=True)


def real_root_count(p: IntPoly, lo: Bound = None, hi: Bound = None) -> int:
    """Real roots of ``p`` in ``(lo, hi]`` counted with multiplicity."""
    return sum(e * sturm_count(f, lo, hi) for f, e in squarefree_decomposition(p))


def cauchy_bound(p: IntPoly) -> int:
    """Integer ``B`` with every root of ``p`` satisfying ``|z| < B``."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lc) + 1


@total_ordering
class AlgebraicReal:
    """A real root of a squarefree integer polynomial, pinned by an isolating interval.

    ``defining`` has exactly one root in the open interval ``(lo, hi)`` and does
    not vanish at either endpoint. Instances are immutable; ``refine`` returns a
    narrower copy.
    """

    __slots__ = ("defining", "lo", "hi")

    def __init__(self, defining: IntPoly, lo: Rational, hi: Rational, *, _checked: bool = False):
        lo, hi = Fraction(lo), Fraction(hi)
        if not _checked:
            defining = squarefree_part(defining)
            if defining.degree < 1:
                raise DegenerateInput("defining polynomial must be non-constant")
            if not lo < hi:
                raise DegenerateInput("isolating interval must have lo < hi")
            if defining.sign_at(lo) == 0 or defining.sign_at(hi) == 0:
                raise DegenerateInput("isolating interval endpoints must not be roots")
            if sturm_count(defining, lo, hi) != 1:
                raise DegenerateInput("interval does not isolate exactly one root")
        object.__setattr__(self, "defining", defining)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicReal is immutable")

    @classmethod
    def from_rational(cls, r: Rational) -> "AlgebraicReal":
        r = Fraction(r)
        p = IntPoly((-r.numerator, r.denominator))
        return cls(p, r - 1, r + 1, _checked=True)

    @classmethod
    def _from_half_open(cls, p: IntPoly, lo: Fraction, hi: Fraction) -> "AlgebraicReal":
        """Build from an interval ``(lo, hi]`` known to hold exactly one root of squarefree ``p``."""
        while p.sign_at(lo) == 0:
            # lo is some other root; shrink towards the isolated one
            m = (lo + hi) / 2
            if sturm_count(p, m, hi) == 1:
                lo = m
            else:
                hi = m
        if p.sign_at(hi) != 0:
            return cls(p, lo, hi, _checked=True)
        # the root is hi itself: centre a small interval on it
        w = (hi - lo) / 2
        while True:
            a, b = hi - w, hi + w
            if p.sign_at(a) and p.sign_at(b) and sturm_count(p, a, b) == 1:
                return cls(p, a, b, _checked=True)
            w /= 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Rational) -> "AlgebraicReal":
        """Bisect until the interval is narrower than ``width``."""
        p, lo, hi = self.defining, self.lo, self.hi
        slo = p.sign_at(lo)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            sm = p.sign_at(mid)
            if sm == 0:
                q = (hi - lo) / 4
                lo, hi = mid - q, mid + q
                slo = p.sign_at(lo)
            elif sm == slo:
                lo = mid
            else:
                hi = mid
        return AlgebraicReal(p, lo, hi, _checked=True)

    def bisect(self) -> "AlgebraicReal":
        return self.refine(self.width / 2)

    def approx(self, decimals: int) -> Fraction:
        """Midpoint of an isolating interval narrower than ``10**-decimals``."""
        if decimals < 0:
            raise ValueError("decimals must be non-negative")
        if self.defining.degree == 1:
            return Fraction(-self.defining[0], self.defining[1])
        a = self.refine(Fraction(1, 10**decimals))
        return (a.lo + a.hi) / 2

    def decimal(self, decimals: int) -> str:
        """Decimal string correct to within one unit in the last place."""
        a = self.approx(decimals + 2)
        return _format_decimal(a, decimals)

    def __float__(self) -> float:
        return float(self.approx(17))

    # -- exact sign of polynomials at this number -------------------------

    def sign_of(self, h: IntPoly) -> int:
        """Exact sign of ``h(alpha)``."""
        if h.is_zero():
            return 0
        if h.degree == 0:
            return 1 if h.lc > 0 else -1
        g = poly_gcd(self.defining, h)
        if g.degree >= 1 and sturm_count(g, self.lo, self.hi) == 1:
            return 0
        a = self
        while sturm_count(h, a.lo, a.hi) or h.sign_at(a.lo) == 0:
            a = a.bisect()
        return h.sign_at(a.hi)

    def compare_rational(self, r: Rational) -> int:
        """Return -1, 0 or 1 as ``alpha`` is below, equal to or above ``r``."""
        r = Fraction(r)
        a = self
        while True:
            if r <= a.lo:
                return 1
            if r >= a.hi:
                return -1
            if a.defining.sign_at(r) == 0:
                return 0
            a = a.bisect()

    def compare(self, other: "AlgebraicReal") -> int:
        a, b = self, other
        g = poly_gcd(a.defining, b.defining)
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            if g.degree >= 1:
                lo, hi = min(a.lo, b.lo), max(a.hi, b.hi)
                in_a = sturm_count(g, a.lo, a.hi) == 1
                in_b = sturm_count(g, b.lo, b.hi) == 1
                if in_a and in_b and g.sign_at(lo) and g.sign_at(hi) and sturm_count(g, lo, hi) == 1:
                    return 0
            a, b = a.bisect(), b.bisect()

    def _cmp(self, other) -> int:
        if isinstance(other, AlgebraicReal):
            return self.compare(other)
        if isinstance(other, (int, Fraction)):
            return self.compare_rational(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        c = self._cmp(other)
        return c is not NotImplemented and c == 0

    def __lt__(self, other) -> bool:
        c = self._cmp(other)
        if c is NotImplemented:
            return NotImplemented
        return c < 0

    def __neg__(self) -> "AlgebraicReal":
        return AlgebraicReal(self.defining.negate_variable().primitive(), -self.hi, -self.lo, _checked=True)

    def __repr__(self) -> str:
        return f"AlgebraicReal({self.defining}, ({self.lo}, {self.hi}))"

    def __str__(self) -> str:
        return f"root of {self.defining} near {self.decimal(6)}"


def _format_decimal(x: Fraction, decimals: int) -> str:
    scaled = x * 10**decimals
    n = round(scaled)  # Fraction.__round__ rounds half to even
    sign = "-" if n < 0 else ""
    n = abs(n)
    if decimals == 0:
        return f"{sign}{n}"
    s = str(n).rjust(decimals + 1, "0")
    return f"{sign}{s[:-decimals]}.{s[-decimals:]}"


def format_decimal(x: Rational, decimals: int) -> str:
    return _format_decimal(Fraction(x), decimals)


def isolate_real_roots(p: IntPoly, lo: Bound = None, hi: Bound = None) -> list[AlgebraicReal]:
    """Isolate every distinct real root of ``p`` in ``(lo, hi]``, in increasing order."""
    if p.is_zero():
        raise DegenerateInput("roots of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree < 1:
        return []
    b = cauchy_bound(sf)
    lo = Fraction(-b) if lo is None else max(Fraction(lo), Fraction(-b))
    hi = Fraction(b) if hi is None else min(Fraction(hi), Fraction(b))
    if lo >= hi:
        return []
    out: list[AlgebraicReal] = []
    stack = [(lo, hi, sturm_count(sf, lo, hi))]
    while stack:
        a, c, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal._from_half_open(sf, a, c))
            continue
        m = (a + c) / 2
        n_left = sturm_count(sf, a, m)
        stack.append((a, m, n_left))
        stack.append((m, c, n - n_left))
    out.sort(key=lambda r: r.lo)
    return out


def largest_real_root(p: IntPoly) -> Optional[AlgebraicReal]:
    """Largest real root of ``p`` or ``None`` when ``p`` has no real roots."""
    sf = squarefree_part(p)
    if sf.degree < 1:
        return None
    b = cauchy_bound(sf)
    lo, hi = Fraction(-b), Fraction(b)
    n = sturm_count(sf, lo, hi)
    if n == 0:
        return None
    while True:
        m = (lo + hi) / 2
        k = sturm_count(sf, m, hi)
        if k == 0:
            hi = m
        elif k == 1:
            return AlgebraicReal._from_half_open(sf, m, hi)
        else:
            lo = m


def approx(a: AlgebraicReal, decimals: int) -> Fraction:
    return a.approx(decimals)
