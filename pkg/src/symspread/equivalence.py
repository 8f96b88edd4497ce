"""The coordinate-swap transform and generating-polynomial recovery.

tau swaps X0 with X3 and X1 with X2.  It preserves the alternating form, so
it carries symplectic spreads to symplectic spreads, but it exchanges the
two distinguished lines

    l_inf = span((0,0,0,1), (0,0,1,0))   and   l = span((0,1,0,0), (1,0,0,0)),

so the image of a spread given by a nice g(x, y) is usually generated by a
much wilder polynomial.  recover_g makes that polynomial explicit: put the
spread back in standard form by intersecting each line with the planes
X0 = 0 and X1 = 0, read off the value grid, and interpolate.

The extraction here is purely geometric (row reading from the canonical
spanning matrices); the closed rational formulas for the transformed line
coordinates exist in tau_grid_via_formulas as an independent cross-check.
"""

from __future__ import annotations

import numpy as np

from .field import GF
from .geometry import Spread, l_infinity, line_span
from .poly import BiPoly, interpolate_bi


class StandardFormError(ValueError):
    """The spread is not in standard position relative to l_inf."""


class StandardForm:
    """Total value grid of a spread in standard position.

    grid[u, v] = w means the spread contains span((0,1,u,v), (1,0,-v,w)).
    """

    __slots__ = ("gf", "grid")

    def __init__(self, gf: GF, grid):
        grid = np.asarray(grid, dtype=np.int64)
        if grid.shape != (gf.q, gf.q):
            raise ValueError("grid must be q x q")
        self.gf = gf
        self.grid = grid


def tau_spread(spread: Spread) -> Spread:
    """Apply the involution (x0,x1,x2,x3) -> (x3,x2,x1,x0) to every line."""
    gf = spread.gf
    out = []
    for P, Q in spread.lines:
        out.append(line_span(gf, P[::-1], Q[::-1]))
    return Spread(gf, out)


def to_standard_form(spread: Spread) -> StandardForm:
    """Read the (u, v) -> w grid off a symplectic spread containing l_inf.

    Each non-l_inf line meets the plane X0 = 0 in one point (0,1,u,v) and
    the plane X1 = 0 in one point (1,0,s,w); both are rows of the canonical
    spanning matrix.  Standard position forces s = -v; anything else means
    the input is not a symplectic spread in standard position and raises
    StandardFormError.
    """
    gf = spread.gf
    q = gf.q
    linf = l_infinity(gf)
    if linf not in set(spread.lines):
        raise StandardFormError("spread does not contain l_inf")
    grid = np.full((q, q), -1, dtype=np.int64)
    for line in spread.lines:
        if line == linf:
            continue
        row0, row1 = line
        # canonical RREF: pivots must sit at columns 0 and 1
        if row0[0] != 1 or row0[1] != 0 or row1[0] != 0 or row1[1] != 1:
            raise StandardFormError(f"line {line} misses the expected plane shapes")
        u, v = row1[2], row1[3]
        s, w = row0[2], row0[3]
        if s != gf.neg(v):
            raise StandardFormError(
                f"line {line} is not totally isotropic in standard position"
            )
        if grid[u, v] != -1:
            raise StandardFormError(f"two lines share the X0=0 point (0,1,{u},{v})")
        grid[u, v] = w
    if (grid == -1).any():
        raise StandardFormError("grid is not total; input is not a spread")
    return StandardForm(gf, grid)


def recover_g(spread: Spread) -> BiPoly:
    """The unique reduced generating polynomial of a standard-position spread."""
    sf = to_standard_form(spread)
    return interpolate_bi(spread.gf, sf.grid)


def tau_grid_via_formulas(gf: GF, g: BiPoly) -> np.ndarray:
    """Value grid of tau(spread_from_g(g)) from the closed rational formulas.

    For (x, y) != (0, 0) the transformed line sits over

        u = g(x,y) / (x g(x,y) + y^2),   v = -y / (x g(x,y) + y^2)

    with value w = -v x / y, read as 1/g(x, 0) when y = 0; the image of
    l_inf itself contributes grid[0, 0] = 0.  Denominators are asserted
    nonzero, which holds exactly when the input generates a spread.
    """
    if g.gf is not gf:
        raise ValueError("mixed field contexts")
    q = gf.q
    grid = np.full((q, q), -1, dtype=np.int64)
    grid[0, 0] = 0
    for x in range(q):
        for y in range(q):
            if x == 0 and y == 0:
                continue
            gv = g.eval(x, y)
            den = gf.add(gf.mul(x, gv), gf.mul(y, y))
            assert den != 0, "x*g + y^2 vanished; input does not generate a spread"
            u = gf.mul(gv, gf.inv(den))
            v = gf.mul(gf.neg(y), gf.inv(den))
            if y != 0:
                w = gf.mul(gf.neg(v), gf.mul(x, gf.inv(y)))
            else:
                w = gf.inv(gv)
            assert grid[u, v] == -1
            grid[u, v] = w
    assert (grid != -1).all()
    return grid
