"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Sequence, Union

from ..errors import DegenerateInput, InexactDivision, InputError

Rational = Union[int, Fraction]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable polynomial ``sum(coeffs[i] * x**i)``.

    Coefficients are stored in ascending order of degree. The zero polynomial
    has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"IntPoly coefficients must be int, got {a!r}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "IntPoly":
        return cls((0,) * n + (c,))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse the comma-separated ascending coefficient format, e.g. ``1,-2,-2,-2,1``."""
        text = text.strip()
        if not text:
            raise InputError("empty polynomial string")
        coeffs = []
        for tok in text.split(","):
            tok = tok.strip()
            try:
                coeffs.append(int(tok))
            except ValueError:
                raise InputError(f"non-integer coefficient {tok!r}") from None
        return cls(coeffs)

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations --------------------------------------------------

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] - other[i] for i in range(n))

    def __rsub__(self, other) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * a for a in self.coeffs)

    def shift(self, n: int) -> "IntPoly":
        """Multiply by ``x**n``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * n + self.coeffs)

    # -- evaluation -------------------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        """Exact sign of ``p(x)`` at a rational point, using integer arithmetic only."""
        if isinstance(x, int):
            v = self(x)
        else:
            x = Fraction(x)
            n, d = x.numerator, x.denominator
            # d**deg * p(n/d) has the same sign since d > 0
            v = 0
            dp = 1
            for c in reversed(self.coeffs):
                v = v * n + c * dp
                dp *= d
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        if not self.coeffs:
            return 0
        s = 1 if self.lc > 0 else -1
        if not positive and self.degree % 2:
            s = -s
        return s

    # -- calculus and composition ----------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, q: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def negate_variable(self) -> "IntPoly":
        """Return ``p(-x)``."""
        return IntPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def scale_variable(self, r: Rational) -> "IntPoly":
        """Primitive integer polynomial with the roots of ``p`` divided by ``r``, i.e. ``p(r*x)`` up to a positive constant."""
        r = Fraction(r)
        if r <= 0:
            raise DegenerateInput("scale factor must be positive")
        u, v = r.numerator, r.denominator
        d = self.degree
        return IntPoly(c * u**i * v ** (d - i) for i, c in enumerate(self.coeffs)).primitive()

    def strip_x(self) -> tuple["IntPoly", int]:
        """Split off the largest power of x: returns (p / x**j, j)."""
        j = 0
        while j < len(self.coeffs) and self.coeffs[j] == 0:
            j += 1
        return IntPoly(self.coeffs[j:]), j

    # -- content and normalisation ----------------------------------------

    def content(self) -> int:
        return reduce(igcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    # -- division ---------------------------------------------------------

    def divmod_monic(self, b: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a divisor whose leading coefficient is +-1 (always exact over Z)."""
        if b.is_zero():
            raise DegenerateInput("division by the zero polynomial")
        if b.lc not in (1, -1):
            raise InexactDivision("divisor is not monic")
        return _divmod_int(self, b)

    def __floordiv__(self, b: "IntPoly") -> "IntPoly":
        return divexact(self, b)

    def __mod__(self, b: "IntPoly") -> "IntPoly":
        return self.divmod_monic(b)[1]

    def pseudo_rem(self, b: "IntPoly") -> "IntPoly":
        """``lc(b)**(deg a - deg b + 1) * a mod b`` computed over Z."""
        if b.is_zero():
            raise DegenerateInput("division by the zero polynomial")
        db, lb = b.degree, b.lc
        e = self.degree - db + 1
        if e <= 0:
            return self
        r = list(self.coeffs)
        while len(r) - 1 >= db and r:
            lead = r[-1]
            shift = len(r) - 1 - db
            r = [lb * c for c in r]
            for i, bc in enumerate(b.coeffs):
                r[shift + i] -= lead * bc
            r.pop()
            while r and r[-1] == 0:
                r.pop()
            e -= 1
        f = lb**e
        return IntPoly(f * c for c in r)

    # -- reciprocity ------------------------------------------------------

    def reciprocal(self) -> "IntPoly":
        if not self.coeffs:
            raise DegenerateInput("reciprocal of the zero polynomial")
        return IntPoly(reversed(self.coeffs))

    def is_palindromic(self) -> bool:
        if not self.coeffs:
            raise DegenerateInput("palindromicity of the zero polynomial")
        return self.coeffs == self.coeffs[::-1]


def _coerce(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    raise TypeError(f"cannot combine IntPoly with {type(p).__name__}")


def _divmod_int(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        return IntPoly(), a
    q = [0] * (len(r) - db)
    for shift in range(len(r) - 1 - db, -1, -1):
        lead = r[shift + db]
        if lead == 0:
            continue
        f, m = divmod(lead, lb)
        if m:
            raise InexactDivision(f"{lb} does not divide {lead}")
        q[shift] = f
        for i, bc in enumerate(b.coeffs):
            r[shift + i] -= f * bc
    return IntPoly(q), IntPoly(r[:db])


def divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient ``a / b`` over Z; raises InexactDivision when ``b`` does not divide ``a``."""
    if b.is_zero():
        raise DegenerateInput("division by the zero polynomial")
    q, r = _divmod_int(a, b)
    if not r.is_zero():
        raise InexactDivision(f"{b} does not divide {a}")
    return q


def divides(b: IntPoly, a: IntPoly) -> bool:
    try:
        divexact(a, b)
    except InexactDivision:
        return False
    return True


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if a.is_zero() and b.is_zero():
        raise DegenerateInput("gcd of two zero polynomials")
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a.primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.degree < 1:
        return p.primitive()
    return divexact(p.primitive(), poly_gcd(p, p.derivative()))


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Factor ``p`` as ``c * prod(f_i ** i)`` with pairwise coprime squarefree ``f_i``.

    Returns the non-constant ``(f_i, i)`` pairs, each ``f_i`` primitive.
    """
    p = p.primitive()
    if p.degree < 1:
        return []
    out = []
    w = squarefree_part(p)
    rest = divexact(p, w)
    i = 1
    while w.degree >= 1:
        y = poly_gcd(w, rest)
        f = divexact(w, y)
        if f.degree >= 1:
            out.append((f.primitive(), i))
        rest = divexact(rest, y)
        w = y
        i += 1
    return out


def poly_arith(a: IntPoly, b: IntPoly, op: str) -> IntPoly:
    """Dispatch for the five exact ring operations used by the CLI and dataset layer."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divexact":
        return divexact(a, b)
    if op == "content_gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown operation {op!r}")


def reciprocal(p: IntPoly) -> IntPoly:
    return p.reciprocal()


def is_palindromic(p: IntPoly) -> bool:
    return p.is_palindromic()
