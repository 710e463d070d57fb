"""The explicit polynomial families attached to the multitwist maps f_{g,k}."""

from __future__ import annotations

from ..errors import OutOfRange
from .poly import IntPoly

# the degree-2 Anosov polynomial used for the torus case of the cover argument
TORUS_ANOSOV = IntPoly((1, -3, 1))


def salem_family_poly(g: int, k: int) -> IntPoly:
    """``x**(2g) - (k-2)(x + ... + x**(2g-1)) + 1``."""
    if g < 2 or k < 3:
        raise OutOfRange(f"need g >= 2 and k >= 3, got g={g}, k={k}")
    return IntPoly([1] + [-(k - 2)] * (2 * g - 1) + [1])


def p_g(g: int) -> IntPoly:
    """The k = 4 member, the minimal polynomial of the genus-g stretch factor."""
    return salem_family_poly(g, 4)


def shifted_family_poly(g: int, k: int) -> IntPoly:
    """``(x - 1) * p_{g,k}(x) = x**(2g+1) - (k-1) x**(2g) + (k-1) x - 1``."""
    if g < 2 or k < 3:
        raise OutOfRange(f"need g >= 2 and k >= 3, got g={g}, k={k}")
    c = [0] * (2 * g + 2)
    c[0], c[1], c[2 * g], c[2 * g + 1] = -1, k - 1, -(k - 1), 1
    return IntPoly(c)
