"""Dehn-twist words acting on first homology, and the homological stretch factor.

Classes are integer vectors in the ordered symplectic basis
``(a_1, b_1, ..., a_g, b_g)`` with ``<a_i, b_i> = 1``. A twist about a curve of
class ``c`` acts by the transvection ``x -> x + s <x, c> c``; words are read
left to right, the leftmost letter acting first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Sequence, Union

from .errors import ConventionError, DegenerateInput, InputError, OutOfRange, UnknownCurve
from .intpoly import (
    AlgebraicReal,
    IntPoly,
    cauchy_bound,
    format_decimal,
    isolate_real_roots,
    outside_radius,
    p_g,
    real_root_count,
)
from .matrix import charpoly, identity, matmul, transpose

HomologyClass = tuple[int, ...]
ClassTable = Mapping[str, HomologyClass]

# sign of the transvection for a positive (lowercase) letter; pinned by calibration
POSITIVE_TWIST_SIGN = 1


def symplectic_form(g: int) -> list[list[int]]:
    j = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Algebraic intersection ``<x, y>``."""
    if len(x) != len(y) or len(x) % 2:
        raise DegenerateInput("classes must have the same even length")
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(len(x) // 2))


@dataclass(frozen=True)
class SymplecticAction:
    genus: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = 2 * self.genus
        if len(m) != n or any(len(r) != n for r in m):
            raise DegenerateInput(f"action matrix must be {n}x{n}")

    @classmethod
    def identity(cls, g: int) -> "SymplecticAction":
        return cls(g, tuple(map(tuple, identity(2 * g))))

    def then(self, other: "SymplecticAction") -> "SymplecticAction":
        """Apply ``self`` first, then ``other``."""
        return SymplecticAction(self.genus, tuple(map(tuple, matmul(other.matrix, self.matrix))))

    def is_symplectic(self) -> bool:
        j = symplectic_form(self.genus)
        m = [list(r) for r in self.matrix]
        return matmul(matmul(transpose(m), j), m) == j

    def det(self) -> int:
        # even dimension, so det = charpoly(0)
        return char_poly(self)[0]

    def __call__(self, v: Sequence[int]) -> HomologyClass:
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.matrix)


def transvection(c: Sequence[int], sign: int, g: int) -> SymplecticAction:
    """The matrix of ``x -> x + sign * <x, c> * c``."""
    if len(c) != 2 * g:
        raise DegenerateInput(f"class has length {len(c)}, expected {2 * g}")
    if sign not in (1, -1):
        raise DegenerateInput("twist sign must be +1 or -1")
    # <x, c> = sum_j x_j * w_j with w = J c
    w = [0] * (2 * g)
    for i in range(g):
        w[2 * i] = c[2 * i + 1]
        w[2 * i + 1] = -c[2 * i]
    rows = tuple(tuple(int(r == s) + sign * c[r] * w[s] for s in range(2 * g)) for r in range(2 * g))
    return SymplecticAction(g, rows)


def char_poly(m: SymplecticAction) -> IntPoly:
    return charpoly(m.matrix)


# -- words ----------------------------------------------------------------

_TOKEN = re.compile(r"([A-Za-z])(\d+)")


@dataclass(frozen=True)
class TwistWord:
    """Letters ``(label, exponent)``; uppercase letters in text are inverse twists."""

    letters: tuple[tuple[str, int], ...]

    @classmethod
    def parse(cls, text: str) -> "TwistWord":
        body = re.sub(r"\s+", "", text)
        pos, out = 0, []
        for m in _TOKEN.finditer(body):
            if m.start() != pos:
                break
            letter, idx = m.groups()
            out.append((letter.lower() + idx, 1 if letter.islower() else -1))
            pos = m.end()
        if pos != len(body):
            raise InputError(f"cannot parse twist word at {body[pos:]!r}")
        return cls(tuple(out))

    @classmethod
    def of(cls, letters: Iterable[tuple[str, int]]) -> "TwistWord":
        return cls(tuple(letters))

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((lab, -e) for lab, e in reversed(self.letters)))

    def __str__(self) -> str:
        return "".join(lab if e > 0 else lab[0].upper() + lab[1:] for lab, e in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def action(word: TwistWord | str, table: ClassTable, g: int | None = None) -> SymplecticAction:
    if isinstance(word, str):
        word = TwistWord.parse(word)
    if g is None:
        if not table:
            raise DegenerateInput("empty class table")
        g = len(next(iter(table.values()))) // 2
    m = SymplecticAction.identity(g)
    for label, e in word.letters:
        try:
            c = table[label]
        except KeyError:
            raise UnknownCurve(label) from None
        m = m.then(transvection(c, POSITIVE_TWIST_SIGN * e, g))
    return m


def _unit(k: int, g: int) -> list[int]:
    v = [0] * (2 * g)
    v[k] = 1
    return v


def _alpha(i: int, g: int) -> list[int]:
    return _unit(2 * i, g)


def _beta(i: int, g: int) -> list[int]:
    return _unit(2 * i + 1, g)


def _sub(x, y):
    return [a - b for a, b in zip(x, y)]


def _raw_chain(g: int) -> dict[str, HomologyClass]:
    t = {}
    for i in range(g):
        t[f"d{i + 1}"] = tuple(_alpha(0, g) if i == 0 else _sub(_alpha(i, g), _alpha(i - 1, g)))
        t[f"c{i + 1}"] = tuple(_beta(i, g))
    return t


def standard_word(g: int, k: int) -> TwistWord:
    """``T_A T_B`` for the standard system: every ``c_i`` (with ``c_g`` k times), then every ``d_i``."""
    if g < 2 or k < 1:
        raise OutOfRange(f"need g >= 2 and k >= 1, got g={g}, k={k}")
    a = [(f"c{i}", 1) for i in range(1, g)] + [(f"c{g}", 1)] * k
    b = [(f"d{i}", 1) for i in range(1, g + 1)]
    return TwistWord(tuple(a + b))


@cache
def _calibrated_chain(g: int) -> tuple[tuple[str, HomologyClass], ...]:
    table = _raw_chain(g)
    p = char_poly(action(standard_word(g, 4), table, g))
    target = p_g(g)
    flipped = target.negate_variable()
    if p not in (target, -target, flipped, -flipped):
        raise ConventionError(f"chain classes for genus {g} give {p}, not +-p_g(+-x)")
    return tuple(sorted(table.items()))


def curve_classes_chain(g: int) -> dict[str, HomologyClass]:
    """Classes of the chain curves ``c_1..c_g``, ``d_1..d_g``.

    ``d_1 = a_1``, ``d_i = a_i - a_{i-1}`` and ``c_i = b_i``, so ``c_i`` meets
    ``d_i`` and ``d_{i+1}`` once. Checked on first use against ``p_g``.
    """
    if g < 2:
        raise OutOfRange(f"genus must be >= 2, got {g}")
    return dict(_calibrated_chain(g))


def xtrain_curve_classes(g: int) -> dict[str, HomologyClass]:
    """Fixed table for the 0-indexed labels ``a_i, b_i, c_i, d_i`` used by the example words.

    ``c_i, d_i`` follow the chain (``c_i`` is chain ``c_{i+1}``); ``a_i`` is the
    basis class ``a_{i+1}`` and ``b_i`` is ``a_{i+1} + b_{i+1}``. Only the
    inequality ``lambda_H <= lambda`` is meaningful for this table.
    """
    if g < 2:
        raise OutOfRange(f"genus must be >= 2, got {g}")
    chain = _raw_chain(g)
    t = {}
    for i in range(g):
        t[f"c{i}"] = chain[f"c{i + 1}"]
        t[f"d{i}"] = chain[f"d{i + 1}"]
        t[f"a{i}"] = tuple(_alpha(i, g))
        t[f"b{i}"] = tuple(a + b for a, b in zip(_alpha(i, g), _beta(i, g)))
    return t


# -- spectral radius --------------------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    """Certified closed interval ``[lo, hi]`` holding the spectral radius."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def decimal(self, decimals: int) -> str:
        return format_decimal((self.lo + self.hi) / 2, decimals)

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def upper(self) -> Fraction:
        return self.hi


SpectralRadius = Union[AlgebraicReal, Enclosure]

_ENCLOSURE_WIDTH = Fraction(1, 10**9)
_CERTIFY_ATTEMPTS = 24


def _abs_real_count(p: IntPoly, r: Fraction) -> int:
    """Real roots with ``|x| > r``, with multiplicity."""
    return real_root_count(p, r, None) + real_root_count(p.negate_variable(), r, None)


def spectral_radius_of_poly(p: IntPoly) -> SpectralRadius:
    """Largest root modulus of ``p``.

    Exact when a real root attains it: every root outside a circle just inside
    ``|r|`` is shown to be real by counting roots outside that circle exactly.
    Otherwise a bisection on the radius gives an enclosure of width ``<= 1e-9``.
    """
    core, _ = p.strip_x()
    if core.degree < 1:
        raise DegenerateInput("polynomial has no non-zero roots")
    roots = isolate_real_roots(core)
    if roots:
        top = max(roots[-1], -roots[0])
        top = top if top.compare_rational(0) > 0 else None
        if top is not None:
            a = top
            for _ in range(_CERTIFY_ATTEMPTS):
                lo = a.lo
                if lo > 0 and outside_radius(core, lo) == _abs_real_count(core, lo):
                    return a
                a = a.refine(a.width / 4)
    return _enclose_radius(core)


def _enclose_radius(core: IntPoly) -> Enclosure:
    lo, hi = Fraction(0), Fraction(cauchy_bound(core))
    while hi - lo > _ENCLOSURE_WIDTH:
        mid = (lo + hi) / 2
        if outside_radius(core, mid) > 0:
            lo = mid
        else:
            hi = mid
    return Enclosure(lo, hi)


def homological_stretch(m: SymplecticAction) -> SpectralRadius:
    return spectral_radius_of_poly(char_poly(m))


def oriented_char_poly(m: SymplecticAction) -> tuple[IntPoly, SpectralRadius]:
    """Characteristic polynomial, with ``x -> -x`` applied when the spectral radius is a negative root.

    Returned with positive leading coefficient, together with the spectral radius.
    """
    p = char_poly(m)
    rho = spectral_radius_of_poly(p)
    if isinstance(rho, AlgebraicReal) and rho.sign_of(p) != 0:
        p = p.negate_variable()
    return (p if p.lc > 0 else -p), rho
