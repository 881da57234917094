"""The two Koszul rows over the projective plane and the projection between them.

Top row: the Koszul complex of ``x1, x2, x3`` on ``S = Q[x1, x2, x3]``.
Bottom row: the Koszul complex of ``x1, x2`` shifted by ``S(-1)`` and
capped by ``x3 : S(-1) -> S/(x1, x2)``; it resolves the point ``Z = V(x1, x2)``
twisted down.  The vertical maps are coordinate projections and the
canonical surjection ``S -> S/(x1, x2)``.
"""

from __future__ import annotations

from .complexes import ChainMap, FreeComplex, koszul_complex
from .domains import QQ, CoefficientDomain
from .ideals import Ideal
from .polynomial import PolyRing


def p2_ring(domain: CoefficientDomain = QQ) -> PolyRing:
    return PolyRing(("x1", "x2", "x3"), domain)


def top_row(ring: PolyRing | None = None) -> FreeComplex:
    ring = ring or p2_ring()
    return koszul_complex(ring.gens(), ring=ring)


def bottom_row(ring: PolyRing | None = None) -> FreeComplex:
    ring = ring or p2_ring()
    x1, x2, x3 = ring.gens()
    point = Ideal([x1, x2], ring)
    twists = ((0,), (1,), (2, 2), (3,))
    diffs = (
        [[x3]],
        [[x2, x1]],
        [[x1], [-x2]],
    )
    labels = (("1",), ("e3",), ("e23", "e13"), ("e123",))
    return FreeComplex(ring, twists, diffs, (point, None, None, None), labels)


def projection_map(top: FreeComplex, bottom: FreeComplex, flip_sign: bool = False) -> ChainMap:
    """Projection onto the kept summands; ``flip_sign`` breaks one square on purpose."""
    one, zero = top.ring.one, top.ring.zero
    f2 = [[one, zero, zero], [zero, -one if flip_sign else one, zero]]
    maps = {
        3: [[one]],
        2: f2,
        1: [[one, zero, zero]],
        0: [[one]],
    }
    return ChainMap(top, bottom, maps)


# the differentials as printed for the top row, rows and columns in basis order
REFERENCE_D1 = [["x3", "x2", "x1"]]
REFERENCE_D2 = [["x2", "x1", "0"], ["-x3", "0", "x1"], ["0", "-x3", "-x2"]]
REFERENCE_D3 = [["x1"], ["-x2"], ["x3"]]


def expected_top_differentials(ring: PolyRing | None = None) -> list:
    ring = ring or p2_ring()
    return [[[ring(s) for s in row] for row in M] for M in (REFERENCE_D1, REFERENCE_D2, REFERENCE_D3)]
