"""Graphs, starlike trees and their exact spectra.

Spectral radii are computed as the largest real root of the adjacency
characteristic polynomial, isolated with Sturm sequences. The Salem number
attached to a dominant tree comes from the bipartite "nu-polynomial"
(characteristic polynomial of ``N N^t``) via ``lambda + 1/lambda + 2 = mu**2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt
from typing import Iterable, Sequence

from .errors import DegenerateInput, Disconnected, InputError, NotCoxeter, NotDominant, OutOfRange
from .intpoly import (
    AlgebraicReal,
    IntPoly,
    largest_real_root,
    strip_cyclotomic,
    sturm_count,
)
from .matrix import charpoly, matmul, transpose


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise NotCoxeter(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotCoxeter(f"multiple edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise OutOfRange("a cycle needs at least 3 vertices")
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def parse(cls, text: str) -> "Graph":
        """First line: vertex count; then one ``u v`` pair per line (0-indexed)."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise InputError("empty graph description")
        try:
            n = int(lines[0])
            edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
        except ValueError as exc:
            raise InputError(f"bad graph description: {exc}") from None
        if any(len(e) != 2 for e in edges):
            raise InputError("each edge line needs exactly two vertices")
        return cls.from_edges(n, edges)

    def adjacency(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a

    def neighbours(self) -> list[list[int]]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            nb[u].append(v)
            nb[v].append(u)
        return nb

    def degrees(self) -> list[int]:
        return [len(x) for x in self.neighbours()]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        nb = self.neighbours()
        seen, stack = {0}, [0]
        while stack:
            for w in nb[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """Two-colouring of the vertices, or None if the graph has an odd cycle."""
        colour = [-1] * self.n
        nb = self.neighbours()
        for s in range(self.n):
            if colour[s] >= 0:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in nb[u]:
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return None
        return [v for v in range(self.n) if colour[v] == 0], [v for v in range(self.n) if colour[v] == 1]

    def is_isomorphic_tree(self, other: "Graph") -> bool:
        """Tree isomorphism via AHU canonical forms rooted at the centre(s)."""
        if self.n != other.n or len(self.edges) != len(other.edges):
            return False
        if len(self.edges) != self.n - 1 or not (self.is_connected() and other.is_connected()):
            raise DegenerateInput("tree isomorphism needs two trees")
        return _tree_canon(self) == _tree_canon(other)


def _tree_centres(g: Graph) -> list[int]:
    nb = g.neighbours()
    deg = [len(x) for x in nb]
    leaves = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for w in nb[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        leaves = nxt
    return leaves


def _tree_canon(g: Graph) -> str:
    nb = g.neighbours()

    def canon(v: int, parent: int) -> str:
        return "(" + "".join(sorted(canon(w, v) for w in nb[v] if w != parent)) + ")"

    return min(canon(c, -1) for c in _tree_centres(g))


@dataclass(frozen=True)
class StarlikeTree:
    arms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "arms", tuple(self.arms))
        if not self.arms:
            raise OutOfRange("a starlike tree needs at least one arm")
        if any(a < 1 for a in self.arms):
            raise OutOfRange("arm lengths must be >= 1")

    @classmethod
    def long_arm(cls, n: int, k: int) -> "StarlikeTree":
        """``T(n, k*1)``: one arm with n edges and k unit arms."""
        return cls((n,) + (1,) * k)

    @classmethod
    def parse(cls, text: str) -> "StarlikeTree":
        """Accepts ``T:n1,n2,...`` or a bare ``n1,n2,...``."""
        body = text.strip()
        if body.upper().startswith("T:"):
            body = body[2:]
        try:
            arms = tuple(int(t) for t in body.split(",") if t.strip())
        except ValueError:
            raise InputError(f"bad starlike tree {text!r}") from None
        return cls(arms)

    @property
    def vertex_count(self) -> int:
        return 1 + sum(self.arms)

    def __str__(self) -> str:
        return "T(" + ",".join(map(str, self.arms)) + ")"


def realize_starlike(t: StarlikeTree) -> Graph:
    """Centre is vertex 0; arm vertices are numbered outward, arm by arm."""
    edges = []
    nxt = 1
    for length in t.arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, frozenset(edges))


def char_poly_adjacency(g: Graph) -> IntPoly:
    if g.n < 1:
        raise DegenerateInput("graph has no vertices")
    return charpoly(g.adjacency())


def spectral_radius(g: Graph) -> AlgebraicReal:
    if not g.edges:
        raise DegenerateInput("edgeless graph")
    if not g.is_connected():
        raise Disconnected("spectral radius needs a connected graph")
    return largest_real_root(char_poly_adjacency(g))


class CoxeterClass(str, enum.Enum):
    SUB_CRITICAL = "SubCritical"
    CRITICAL = "Critical"
    NON_CRITICAL_DOMINANT = "NonCriticalDominant"


def classify_coxeter(g: Graph) -> CoxeterClass:
    """Compare the spectral radius with 2 exactly (spectral proxy for the Coxeter classes)."""
    if not g.edges:
        raise DegenerateInput("edgeless graph")
    if not g.is_connected():
        raise Disconnected("Coxeter classification needs a connected graph")
    p = char_poly_adjacency(g)
    if sturm_count(p, 2, None) > 0:
        return CoxeterClass.NON_CRITICAL_DOMINANT
    if p(2) == 0:
        return CoxeterClass.CRITICAL
    return CoxeterClass.SUB_CRITICAL


def biadjacency(g: Graph) -> list[list[int]]:
    """The 0/1 matrix N between the two colour classes, smaller class indexing the rows."""
    parts = g.bipartition()
    if parts is None:
        raise DegenerateInput("graph is not bipartite")
    rows, cols = sorted(parts, key=len)
    a = g.adjacency()
    return [[a[r][c] for c in cols] for r in rows]


def nu_poly(g: Graph) -> IntPoly:
    """Characteristic polynomial of ``N N^t`` for the bipartition of ``g``."""
    n = biadjacency(g)
    return charpoly(matmul(n, transpose(n)))


def salem_transform(c: IntPoly) -> IntPoly:
    """``x**deg(c) * c(x + 1/x + 2)``: sends each root ``nu`` to the roots of ``x**2 - (nu - 2) x + 1``."""
    d = c.degree
    xp1_sq = IntPoly((1, 2, 1))
    out = IntPoly()
    for j, a in enumerate(c.coeffs):
        if a:
            out = out + (xp1_sq**j).shift(d - j).scale(a)
    return out


def salem_factor(p: IntPoly) -> IntPoly:
    """Strip powers of x and every cyclotomic factor; primitive with positive leading coefficient."""
    core, _ = p.primitive().strip_x()
    core, _ = strip_cyclotomic(core)
    return core.primitive()


def tree_salem_poly(t: StarlikeTree) -> IntPoly:
    g = realize_starlike(t)
    if classify_coxeter(g) is not CoxeterClass.NON_CRITICAL_DOMINANT:
        raise NotDominant(f"{t} is not a non-critical dominant graph")
    return salem_factor(salem_transform(nu_poly(g)))


@dataclass(frozen=True)
class SpectralBounds:
    ok: bool
    lower_ok: bool
    upper_ok: bool
    non_integer: bool
    lower: Fraction
    upper: Fraction
    mu_squared: AlgebraicReal

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "non_integer": self.non_integer,
            "mu_squared_interval": [str(self.mu_squared.lo), str(self.mu_squared.hi)],
            "bounds": [str(self.lower), str(self.upper)],
        }


def check_spectral_bounds(n: int, k: int) -> SpectralBounds:
    """Decide ``k+1 < mu**2 < k**2/(k-1)`` for ``T(n, k*1)`` by exact sign checks on the nu-polynomial."""
    if n < 1 or k < 3:
        raise OutOfRange(f"need n >= 1 and k >= 3, got n={n}, k={k}")
    c = nu_poly(realize_starlike(StarlikeTree.long_arm(n, k)))
    lower, upper = Fraction(k + 1), Fraction(k * k, k - 1)
    # largest root above k+1: some root in (k+1, inf) and k+1 itself is not the top root
    lower_ok = sturm_count(c, lower, None) >= 1
    # nothing at or above the upper bound
    upper_ok = sturm_count(c, upper, None) == 0 and c.sign_at(upper) != 0
    nu = largest_real_root(c)
    # mu is an integer s exactly when nu = s**2
    top = isqrt(ceil(nu.hi)) + 1
    non_integer = all(nu.compare_rational(s * s) != 0 for s in range(top + 1))
    return SpectralBounds(lower_ok and upper_ok and non_integer, lower_ok, upper_ok, non_integer, lower, upper, nu)
