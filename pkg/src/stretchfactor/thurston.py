"""Thurston's construction for two filling multicurves.

A pair of multicurves is encoded by its geometric intersection matrix N. The
Perron-Frobenius eigenvalue nu of ``N N^t`` determines the affine action

    T_A -> [[1, -sqrt(nu)], [0, 1]],    T_B -> [[1, 0], [sqrt(nu), 1]],

and a word in T_A, T_B is pseudo-Anosov exactly when the image has
``|trace| > 2``. All entries live in ``Q[nu][w] / (m(nu), w**2 - nu)`` where
``m`` is an integer polynomial vanishing at nu, so every sign decision is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, Sequence

from .errors import DegenerateInput, Disconnected, InputError, NotCoxeter, NotHyperbolic, OutOfRange
from .graphspec import Graph, salem_factor, salem_transform
from .intpoly import (
    AlgebraicReal,
    IntPoly,
    inverse_trace_transform,
    largest_real_root,
    squarefree_part,
    sturm_count,
)
from .matrix import charpoly, krylov_annihilator, matmul, rational_charpoly, transpose


@dataclass(frozen=True)
class CurveSystem:
    """Multicurves A (rows) and B (columns) with intersection matrix ``N[j][k] = i(a_j, b_k)``.

    ``fills`` records whether filling is guaranteed by construction; for
    user-supplied matrices it cannot be checked from N and verdicts are
    conditional on it.
    """

    names_a: tuple[str, ...]
    names_b: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    fills: bool = False

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "names_a", tuple(self.names_a))
        object.__setattr__(self, "names_b", tuple(self.names_b))
        if len(m) != len(self.names_a) or any(len(row) != len(self.names_b) for row in m):
            raise InputError("intersection matrix shape does not match curve names")
        if any(x < 0 for row in m for x in row):
            raise InputError("intersection numbers must be non-negative")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "CurveSystem":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InputError("empty intersection matrix")
        return cls(
            tuple(f"a{j}" for j in range(len(rows))),
            tuple(f"b{k}" for k in range(len(rows[0]))),
            tuple(tuple(r) for r in rows),
        )

    @classmethod
    def parse(cls, text: str) -> "CurveSystem":
        """Rows of whitespace-separated non-negative integers."""
        try:
            rows = [[int(t) for t in ln.split()] for ln in text.strip().splitlines() if ln.strip()]
        except ValueError:
            raise InputError("intersection matrix entries must be integers") from None
        if not rows or len({len(r) for r in rows}) != 1:
            raise InputError("intersection matrix rows must be non-empty and of equal length")
        return cls.from_matrix(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.names_a), len(self.names_b)

    def has_empty_line(self) -> bool:
        """Some curve meets nothing in the other multicurve."""
        rows_empty = any(not any(row) for row in self.matrix)
        cols_empty = any(not any(col) for col in zip(*self.matrix))
        return rows_empty or cols_empty

    def is_connected(self) -> bool:
        n, m = self.shape
        edges = [(j, n + k) for j in range(n) for k in range(m) if self.matrix[j][k]]
        return Graph(n + m, frozenset(edges)).is_connected()


def standard_system(g: int, k: int) -> CurveSystem:
    """The chain d_1, c_1, ..., d_g, c_g with c_g replaced by k parallel copies."""
    if g < 2 or k < 3:
        raise OutOfRange(f"need g >= 2 and k >= 3, got g={g}, k={k}")
    rows = []
    names_a = []
    for i in range(1, g):
        row = [0] * g
        row[i - 1] = row[i] = 1  # c_i meets d_i and d_{i+1}
        rows.append(tuple(row))
        names_a.append(f"c{i}")
    last = tuple(int(j == g - 1) for j in range(g))
    for j in range(1, k + 1):
        rows.append(last)
        names_a.append(f"c{g}_{j}")
    names_b = [f"d{i}" for i in range(1, g + 1)]
    return CurveSystem(tuple(names_a), tuple(names_b), tuple(rows), fills=True)


def config_graph(sys: CurveSystem) -> Graph:
    """Vertices 0..n-1 for A, n..n+m-1 for B; one edge per intersection point."""
    n, m = sys.shape
    edges = []
    for j in range(n):
        for k in range(m):
            x = sys.matrix[j][k]
            if x > 1:
                raise NotCoxeter(f"{sys.names_a[j]} meets {sys.names_b[k]} {x} times")
            if x:
                edges.append((j, n + k))
    return Graph(n + m, frozenset(edges))


def gram(sys: CurveSystem) -> list[list[int]]:
    n = [list(r) for r in sys.matrix]
    return matmul(n, transpose(n))


def nu_poly(sys: CurveSystem) -> IntPoly:
    """Characteristic polynomial of ``N N^t``."""
    return charpoly(gram(sys))


def _require_connected(sys: CurveSystem) -> None:
    if not sys.is_connected():
        raise Disconnected("A and B do not form a connected configuration")


def nu(sys: CurveSystem) -> AlgebraicReal:
    """The Perron-Frobenius eigenvalue of ``N N^t``."""
    _require_connected(sys)
    core, _ = nu_poly(sys).strip_x()
    return largest_real_root(core)


def nu_min_factor(sys: CurveSystem) -> IntPoly:
    """A small squarefree factor of the nu-polynomial that still vanishes at nu.

    Uses the Krylov annihilator of the all-ones vector: the Perron vector is
    positive, so its eigenvalue cannot drop out.
    """
    _require_connected(sys)
    gm = gram(sys)
    q = krylov_annihilator(gm, [1] * len(gm))
    q, _ = squarefree_part(q).strip_x()
    return q.primitive()


def lifted_poly(sys: CurveSystem) -> IntPoly:
    """``x**d c(x + 1/x + 2)`` for the full nu-polynomial with its zero roots removed.

    No cyclotomic stripping: for the standard family this is exactly ``p_{g,k}``.
    """
    core, _ = nu_poly(sys).strip_x()
    return salem_transform(core)


# -- exact arithmetic in Q[nu][w] / (m(nu), w^2 - nu) ---------------------

RPoly = tuple  # ascending Fraction coefficients


def _rtrim(c: list) -> RPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _radd(a: RPoly, b: RPoly) -> RPoly:
    n = max(len(a), len(b))
    return _rtrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _rneg(a: RPoly) -> RPoly:
    return tuple(-x for x in a)


def _rmul(a: RPoly, b: RPoly) -> RPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _rtrim(out)


def _rmod(a: RPoly, m: RPoly) -> RPoly:
    r = list(a)
    dm, lm = len(m) - 1, m[-1]
    while len(r) - 1 >= dm and r:
        f = r[-1] / lm
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] -= f * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _to_intpoly(a: RPoly) -> tuple[IntPoly, int]:
    """Positive integer multiple of a rational polynomial, with the multiplier."""
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    return IntPoly(int(c * den) for c in a), den


@dataclass(frozen=True)
class NuElement:
    """``r(nu) + s(nu) * sqrt(nu)`` with ``r, s`` reduced modulo the field modulus."""

    r: RPoly
    s: RPoly

    def is_zero(self) -> bool:
        return not self.r and not self.s

    def __str__(self) -> str:
        def fmt(p):
            out = ""
            for i, c in enumerate(p):
                if not c:
                    continue
                mono = "" if i == 0 else "nu" if i == 1 else f"nu^{i}"
                mag = abs(c)
                body = f"{mag}" if not mono else mono if mag == 1 else f"{mag}*{mono}"
                if not out:
                    out = ("-" if c < 0 else "") + body
                else:
                    out += (" - " if c < 0 else " + ") + body
            return out or "0"

        if not self.s:
            return fmt(self.r)
        return f"({fmt(self.r)}) + ({fmt(self.s)})*sqrt(nu)"


class NuField:
    """Arithmetic and exact signs in ``Q[nu][w] / (m(nu), w**2 - nu)`` at the real point nu > 0."""

    def __init__(self, modulus: IntPoly, value: AlgebraicReal):
        if value.compare_rational(0) <= 0:
            raise DegenerateInput("nu must be positive to adjoin its square root")
        self.modulus = modulus
        self.value = AlgebraicReal(modulus, value.lo, value.hi)
        self._m = tuple(Fraction(c) for c in modulus.coeffs)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def const(self, c) -> NuElement:
        c = Fraction(c)
        return NuElement((c,) if c else (), ())

    def sqrt_nu(self) -> NuElement:
        return NuElement((), (Fraction(1),))

    def nu(self) -> NuElement:
        return NuElement(_rmod((Fraction(0), Fraction(1)), self._m), ())

    def add(self, a: NuElement, b: NuElement) -> NuElement:
        return NuElement(_radd(a.r, b.r), _radd(a.s, b.s))

    def neg(self, a: NuElement) -> NuElement:
        return NuElement(_rneg(a.r), _rneg(a.s))

    def sub(self, a: NuElement, b: NuElement) -> NuElement:
        return self.add(a, self.neg(b))

    def mul(self, a: NuElement, b: NuElement) -> NuElement:
        nu_poly_ = (Fraction(0), Fraction(1))
        r = _radd(_rmul(a.r, b.r), _rmul(_rmul(a.s, b.s), nu_poly_))
        s = _radd(_rmul(a.r, b.s), _rmul(a.s, b.r))
        return NuElement(_rmod(r, self._m), _rmod(s, self._m))

    def _sign_poly(self, p: RPoly) -> int:
        if not p:
            return 0
        ip, _ = _to_intpoly(p)
        return self.value.sign_of(ip)

    def sign(self, a: NuElement) -> int:
        """Exact sign of the real number ``r(nu) + s(nu) sqrt(nu)``."""
        sr, ss = self._sign_poly(a.r), self._sign_poly(a.s)
        if ss == 0:
            return sr
        if sr == 0 or sr == ss:
            return ss if sr == 0 else sr
        # opposite signs: compare r**2 with s**2 * nu
        diff = _radd(_rmul(a.r, a.r), _rneg(_rmul(_rmul(a.s, a.s), (Fraction(0), Fraction(1)))))
        sd = self._sign_poly(_rmod(diff, self._m))
        return sr * sd

    def enclose(self, a: NuElement, width: Fraction) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value of ``a``, from nu refined below ``width``."""
        v = self.value.refine(width)
        lo, hi = v.lo, v.hi
        r = _interval_eval(a.r, lo, hi)
        if not a.s:
            return r
        s = _interval_eval(a.s, lo, hi)
        w = (_sqrt_lower(lo), _sqrt_upper(hi))
        return _interval_add(r, _interval_mul(s, w))

    def multiplication_matrix(self, a: NuElement) -> list[list[Fraction]]:
        """Matrix of ``x -> a*x`` on the basis ``nu^i`` (i < d), followed by ``nu^i w`` when needed."""
        d = self.degree
        with_w = bool(a.s)
        basis = [NuElement(_unit(i), ()) for i in range(d)]
        if with_w:
            basis += [NuElement((), _unit(i)) for i in range(d)]
        cols = []
        for e in basis:
            p = self.mul(a, e)
            col = [p.r[i] if i < len(p.r) else Fraction(0) for i in range(d)]
            if with_w:
                col += [p.s[i] if i < len(p.s) else Fraction(0) for i in range(d)]
            cols.append(col)
        return transpose(cols)


def _unit(i: int) -> RPoly:
    return tuple([Fraction(0)] * i + [Fraction(1)])


def _interval_mul(a, b):
    prods = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(prods), max(prods)


def _interval_add(a, b):
    return a[0] + b[0], a[1] + b[1]


def _interval_eval(p: RPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    acc = (Fraction(0), Fraction(0))
    for c in reversed(p):
        acc = _interval_add(_interval_mul(acc, (lo, hi)), (c, c))
    return acc


_SQRT_BITS = 80


def _sqrt_lower(q: Fraction) -> Fraction:
    q = Fraction(q)
    if q <= 0:
        return Fraction(0)
    s = 1 << _SQRT_BITS
    return Fraction(isqrt(q.numerator * q.denominator * s * s), q.denominator * s)


def _sqrt_upper(q: Fraction) -> Fraction:
    q = Fraction(q)
    if q <= 0:
        return Fraction(0)
    s = 1 << _SQRT_BITS
    return Fraction(isqrt(q.numerator * q.denominator * s * s) + 1, q.denominator * s)


def _bigger_eigen_interval(t_lo: Fraction, t_hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of ``(t + sqrt(t**2 - 4)) / 2`` for ``t`` in ``[t_lo, t_hi]``, ``t_lo > 2``."""
    return (t_lo + _sqrt_lower(t_lo * t_lo - 4)) / 2, (t_hi + _sqrt_upper(t_hi * t_hi - 4)) / 2


@dataclass(frozen=True)
class AffineElement:
    """A 2x2 matrix ``[[a, b], [c, d]]`` over a :class:`NuField`."""

    field: NuField
    a: NuElement
    b: NuElement
    c: NuElement
    d: NuElement

    def __matmul__(self, o: "AffineElement") -> "AffineElement":
        f = self.field
        return AffineElement(
            f,
            f.add(f.mul(self.a, o.a), f.mul(self.b, o.c)),
            f.add(f.mul(self.a, o.b), f.mul(self.b, o.d)),
            f.add(f.mul(self.c, o.a), f.mul(self.d, o.c)),
            f.add(f.mul(self.c, o.b), f.mul(self.d, o.d)),
        )

    def trace(self) -> NuElement:
        return self.field.add(self.a, self.d)

    def det(self) -> NuElement:
        f = self.field
        return f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))

    def inverse(self) -> "AffineElement":
        """Inverse assuming determinant 1."""
        f = self.field
        return AffineElement(f, self.d, f.neg(self.b), f.neg(self.c), self.a)

    def is_identity(self) -> bool:
        one = self.field.const(1)
        return self.a == one and self.d == one and self.b.is_zero() and self.c.is_zero()


def nu_field(sys: CurveSystem) -> NuField:
    return NuField(nu_min_factor(sys), nu(sys))


def rho_generators(sys: CurveSystem, field: NuField | None = None) -> tuple[AffineElement, AffineElement]:
    f = field or nu_field(sys)
    one, zero, w = f.const(1), f.const(0), f.sqrt_nu()
    ta = AffineElement(f, one, f.neg(w), zero, one)
    tb = AffineElement(f, one, zero, w, one)
    return ta, tb


class PATag(str, enum.Enum):
    PSEUDO_ANOSOV = "PseudoAnosov"
    PARABOLIC = "Parabolic"
    ELLIPTIC = "Elliptic"


@dataclass(frozen=True)
class PAClassification:
    tag: PATag
    trace: str
    stretch: AlgebraicReal | None = None
    minpoly_candidate: IntPoly | None = None
    conditional_on_filling: bool = False

    def as_dict(self, decimals: int = 6) -> dict:
        out = {
            "tag": self.tag.value,
            "trace": self.trace,
            "conditional_on_filling": self.conditional_on_filling,
        }
        if self.stretch is not None:
            out["stretch"] = self.stretch.decimal(decimals)
            out["stretch_interval"] = [str(self.stretch.lo), str(self.stretch.hi)]
        if self.minpoly_candidate is not None:
            out["minpoly_candidate"] = list(self.minpoly_candidate.coeffs)
        return out


_LETTERS = {"A": ("A", 1), "a": ("A", -1), "B": ("B", 1), "b": ("B", -1)}


def parse_ab_word(word: str | Iterable[str]) -> list[tuple[str, int]]:
    """Letters ``A a B b`` (lowercase = inverse); list items may also be ``A^-1``/``A⁻¹``."""
    tokens = list(word) if isinstance(word, str) else list(word)
    out = []
    for t in tokens:
        t = t.strip()
        if not t:
            continue
        if t in _LETTERS:
            out.append(_LETTERS[t])
        elif t in ("A^-1", "A⁻¹", "B^-1", "B⁻¹"):
            out.append((t[0], -1))
        else:
            raise InputError(f"unknown letter {t!r} in word; use A a B b")
    return out


def _word_matrix(sys: CurveSystem, letters, field: NuField) -> AffineElement:
    ta, tb = rho_generators(sys, field)
    gens = {("A", 1): ta, ("A", -1): ta.inverse(), ("B", 1): tb, ("B", -1): tb.inverse()}
    m = None
    for letter in letters:
        g = gens[letter]
        m = g if m is None else m @ g
    return m


def classify_word(sys: CurveSystem, word) -> PAClassification:
    letters = parse_ab_word(word)
    if not letters:
        raise DegenerateInput("empty word")
    f = nu_field(sys)
    t = _word_matrix(sys, letters, f).trace()
    two = f.const(2)
    above = f.sign(f.sub(t, two))
    below = f.sign(f.add(t, two))
    conditional = not sys.fills
    if above > 0 or below < 0:
        tau = t if above > 0 else f.neg(t)
        cand = _stretch_candidate(f, tau)
        stretch = _stretch_value(f, tau, cand)
        return PAClassification(PATag.PSEUDO_ANOSOV, str(t), stretch, cand, conditional)
    tag = PATag.PARABOLIC if above == 0 or below == 0 else PATag.ELLIPTIC
    return PAClassification(tag, str(t), conditional_on_filling=conditional)


def _stretch_candidate(f: NuField, tau: NuElement) -> IntPoly:
    """Eliminate nu from ``lambda + 1/lambda = tau`` and drop cyclotomic junk."""
    c = rational_charpoly(f.multiplication_matrix(tau))
    return salem_factor(squarefree_part(inverse_trace_transform(c)))


def _stretch_value(f: NuField, tau: NuElement, cand: IntPoly) -> AlgebraicReal:
    width = Fraction(1, 2**16)
    while True:
        lo, hi = f.enclose(tau, width)
        if lo > 2:
            a, b = _bigger_eigen_interval(lo, hi)
            if cand.sign_at(a) and cand.sign_at(b) and sturm_count(cand, a, b) == 1:
                return AlgebraicReal(cand, a, b, _checked=True)
        width /= 2**16


def stretch_TATB(sys: CurveSystem) -> AlgebraicReal:
    """Larger root of ``x**2 - (nu - 2) x + 1``, requiring nu > 4."""
    v = nu(sys)
    if v.compare_rational(4) <= 0:
        raise NotHyperbolic("nu <= 4: T_A T_B is not hyperbolic")
    defining = salem_factor(salem_transform(nu_min_factor(sys)))
    return largest_real_root(defining)
