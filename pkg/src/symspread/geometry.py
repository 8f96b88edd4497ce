"""PG(3,q): canonical points/lines, the alternating form, and spread checks.

Points are 4-tuples of element indices, canonicalized so the first nonzero
coordinate is 1; PG(3,q) then has exactly q^3 + q^2 + q + 1 of them and each
canonical point owns a perfect index (used as an occupancy slot).  Lines are
2x4 spanning matrices in reduced row echelon form, which makes every
combination row0 + t*row1 (plus row1 itself) already canonical, so the
partition check never needs per-point normalization.

The fixed non-degenerate alternating form is

    (x, y) = x0*y3 - x3*y0 - x1*y2 + y1*x2

and is hard-coded throughout; all such forms are equivalent, so nothing is
lost by pinning this one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import GF
from .poly import BiPoly, UniPoly

# lines per occupancy chunk in verify_spread; bounds transient memory
_CHUNK_POINTS = 2_000_000


def point_count(q: int) -> int:
    return q ** 3 + q ** 2 + q + 1


def symplectic_form(gf: GF, P, Q) -> int:
    """Value of the alternating form on two coordinate 4-tuples."""
    x0, x1, x2, x3 = (int(c) for c in P)
    y0, y1, y2, y3 = (int(c) for c in Q)
    acc = gf.sub(gf.mul(x0, y3), gf.mul(x3, y0))
    acc = gf.sub(acc, gf.mul(x1, y2))
    return gf.add(acc, gf.mul(y1, x2))


def _form_arr(gf: GF, P, Q):
    acc = gf.sub_arr(gf.mul_arr(P[..., 0], Q[..., 3]), gf.mul_arr(P[..., 3], Q[..., 0]))
    acc = gf.sub_arr(acc, gf.mul_arr(P[..., 1], Q[..., 2]))
    return gf.add_arr(acc, gf.mul_arr(Q[..., 1], P[..., 2]))


def canonical_point(gf: GF, v) -> tuple:
    """Scale a nonzero 4-vector so its first nonzero coordinate is 1."""
    v = [int(c) for c in v]
    for c in v:
        if c:
            s = gf.inv(c)
            return tuple(gf.mul(s, x) for x in v)
    raise ValueError("zero vector has no projective point")


def point_index(gf: GF, pt) -> int:
    """Perfect index of a canonical point, lexicographic by leading position."""
    q = gf.q
    c0, c1, c2, c3 = pt
    if c0:
        return c1 * q * q + c2 * q + c3
    if c1:
        return q ** 3 + c2 * q + c3
    if c2:
        return q ** 3 + q ** 2 + c3
    return q ** 3 + q ** 2 + q


def decode_point(gf: GF, idx: int) -> tuple:
    q = gf.q
    if idx < q ** 3:
        return (1, idx // (q * q), (idx // q) % q, idx % q)
    idx -= q ** 3
    if idx < q * q:
        return (0, 1, idx // q, idx % q)
    idx -= q * q
    if idx < q:
        return (0, 0, 1, idx)
    return (0, 0, 0, 1)


def line_span(gf: GF, P, Q) -> tuple:
    """Canonical line through two points: RREF of the 2x4 spanning matrix."""
    M = [[int(c) for c in P], [int(c) for c in Q]]
    r = 0
    for col in range(4):
        pivot = None
        for row in range(r, 2):
            if M[row][col]:
                pivot = row
                break
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        s = gf.inv(M[r][col])
        M[r] = [gf.mul(s, x) for x in M[r]]
        other = 1 - r
        if M[other][col]:
            f = M[other][col]
            M[other] = [gf.sub(M[other][k], gf.mul(f, M[r][k])) for k in range(4)]
        r += 1
        if r == 2:
            break
    if r < 2:
        raise ValueError("degenerate spanning pair")
    return (tuple(M[0]), tuple(M[1]))


def l_infinity(gf: GF) -> tuple:
    return ((0, 0, 1, 0), (0, 0, 0, 1))


def line_points(gf: GF, line) -> list:
    """All q+1 canonical points of a canonical line."""
    P, Q = line
    pts = []
    for t in range(gf.q):
        pts.append(tuple(gf.add(P[k], gf.mul(t, Q[k])) for k in range(4)))
    pts.append(tuple(Q))
    return pts


class Spread:
    """A candidate spread: a sorted collection of canonical lines."""

    __slots__ = ("gf", "lines", "_array")

    def __init__(self, gf: GF, lines):
        self.gf = gf
        self.lines = tuple(sorted(lines))
        self._array = None

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = np.array(self.lines, dtype=np.int64)
        return self._array

    def contains_l_infinity(self) -> bool:
        return l_infinity(self.gf) in set(self.lines)

    def to_json(self):
        return [[list(r0), list(r1)] for r0, r1 in self.lines]

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __eq__(self, other):
        return (
            isinstance(other, Spread)
            and self.gf is other.gf
            and self.lines == other.lines
        )

    def __hash__(self):
        return hash((id(self.gf), self.lines))

    def __repr__(self):
        return f"Spread(q={self.gf.q}, lines={len(self.lines)})"


def spread_from_fg(gf: GF, f: BiPoly, g: BiPoly) -> Spread:
    """The line set l_inf plus span((0,1,x,y), (1,0,f(x,y),g(x,y))) over all x, y."""
    if f.gf is not gf or g.gf is not gf:
        raise ValueError("mixed field contexts")
    q = gf.q
    F = f.eval_grid().ravel()
    W = g.eval_grid().ravel()
    xs, ys = np.divmod(np.arange(q * q), q)
    row0 = np.stack([np.ones(q * q, dtype=np.int64), np.zeros(q * q, dtype=np.int64), F, W], axis=1)
    row1 = np.stack([np.zeros(q * q, dtype=np.int64), np.ones(q * q, dtype=np.int64), xs, ys], axis=1)
    lines = [l_infinity(gf)]
    lines.extend(
        (tuple(a), tuple(b)) for a, b in zip(row0.tolist(), row1.tolist())
    )
    return Spread(gf, lines)


def spread_from_g(gf: GF, g: BiPoly) -> Spread:
    """Symplectic candidate: second spanning point (1, 0, -y, g(x,y)).

    The form vanishes on every spanning pair by construction; asserted here.
    """
    minus_y = BiPoly(gf, {(0, 1): gf.neg(1)})
    s = spread_from_fg(gf, minus_y, g)
    arr = s.array
    assert (_form_arr(gf, arr[:, 0, :], arr[:, 1, :]) == 0).all()
    return s


@dataclass(frozen=True)
class Violation:
    kind: str          # point_uncovered | point_multiply_covered | duplicate_line | nonisotropic_line
    witness: dict

    def to_json(self):
        return {"kind": self.kind, "witness": self.witness}


@dataclass(frozen=True)
class VerifyReport:
    is_spread: bool
    is_symplectic: bool
    first_violation: Violation | None = None
    violations: tuple = ()

    def to_json(self):
        return {
            "is_spread": self.is_spread,
            "is_symplectic": self.is_symplectic,
            "first_violation": self.first_violation.to_json() if self.first_violation else None,
            "violations": [v.to_json() for v in self.violations],
        }


def _line_point_indices(gf: GF, arr: np.ndarray) -> np.ndarray:
    """Occupancy indices of all q+1 points of each canonical line in arr."""
    q = gf.q
    P, Q = arr[:, 0, :], arr[:, 1, :]
    ts = np.arange(q, dtype=np.int64)
    combos = gf.add_arr(P[:, None, :], gf.mul_arr(ts[None, :, None], Q[:, None, :]))
    pts = np.concatenate([combos, Q[:, None, :]], axis=1)          # (L, q+1, 4)
    lead0 = np.argmax(P != 0, axis=1)
    lead1 = np.argmax(Q != 0, axis=1)
    leads = np.concatenate(
        [np.broadcast_to(lead0[:, None], (len(P), q)), lead1[:, None]], axis=1
    )
    c1, c2, c3 = pts[..., 1], pts[..., 2], pts[..., 3]
    q3, q2 = q ** 3, q ** 2
    return np.select(
        [leads == 0, leads == 1, leads == 2],
        [c1 * q2 + c2 * q + c3, q3 + c2 * q + c3, q3 + q2 + c3],
        default=q3 + q2 + q,
    )


def verify_spread(spread: Spread, census: bool = False) -> VerifyReport:
    """Exact partition + isotropy verification by occupancy counting.

    Every line contributes its q+1 canonical points to a counter over all
    q^3+q^2+q+1 point slots; the set is a spread iff every slot ends at 1.
    The symplectic flag additionally requires the form to vanish on each
    line's spanning pair.  With census=True all violations are collected,
    otherwise only the first (minimal point index, then line order).
    """
    gf = spread.gf
    q = gf.q
    expected = q * q + 1
    if len(spread) != expected:
        raise ValueError(f"wrong line count: {len(spread)} != q^2+1 = {expected}")

    violations = []
    seen = set()
    for ln in spread.lines:
        if ln in seen:
            violations.append(Violation("duplicate_line", {"line": [list(ln[0]), list(ln[1])]}))
            if not census:
                break
        seen.add(ln)

    arr = spread.array
    counts = np.zeros(point_count(q), dtype=np.int64)
    step = max(1, _CHUNK_POINTS // (q + 1))
    for lo in range(0, len(arr), step):
        idx = _line_point_indices(gf, arr[lo : lo + step])
        counts += np.bincount(idx.ravel(), minlength=point_count(q))

    bad = np.nonzero(counts != 1)[0]
    if bad.size and not (violations and not census):
        take = bad if census else bad[:1]
        for b in take:
            kind = "point_uncovered" if counts[b] == 0 else "point_multiply_covered"
            violations.append(
                Violation(kind, {"point": list(decode_point(gf, int(b))), "count": int(counts[b])})
            )
            if not census:
                break

    is_spread = not violations

    forms = _form_arr(gf, arr[:, 0, :], arr[:, 1, :])
    noniso = np.nonzero(forms != 0)[0]
    iso_violations = []
    for k in noniso if census else noniso[:1]:
        ln = spread.lines[int(k)]
        iso_violations.append(
            Violation(
                "nonisotropic_line",
                {"line": [list(ln[0]), list(ln[1])], "form_value": int(forms[k])},
            )
        )
    is_symplectic = is_spread and noniso.size == 0

    all_violations = violations + iso_violations
    first = None
    if not is_spread:
        first = violations[0]
    elif not is_symplectic:
        first = iso_violations[0]
    return VerifyReport(
        is_spread=is_spread,
        is_symplectic=is_symplectic,
        first_violation=first,
        violations=tuple(all_violations) if census else (),
    )


def permutation_criterion(gf: GF, g: BiPoly) -> bool:
    """Whether x -> g(x, ax-b) + a^2 x is a bijection for every pair (a, b).

    Evaluated pointwise from the precomputed value grid of g; per a-value the
    q maps (one per b) are checked with a single occupancy pass.  Early exit
    at the first failing a.
    """
    if g.gf is not gf:
        raise ValueError("mixed field contexts")
    q = gf.q
    W = g.eval_grid()
    xs = np.arange(q, dtype=np.int64)
    xi = xs[:, None]
    for a in range(q):
        ax = gf.scale_arr(a, xs)
        Y = gf.sub_arr(ax[:, None], xs[None, :])        # y = a*x - b, (x, b)
        V = gf.add_arr(W[xi, Y], gf.scale_arr(gf.mul(a, a), xs)[:, None])
        keys = V * q + xs[None, :]
        if np.bincount(keys.ravel(), minlength=q * q).max() > 1:
            return False
    return True


def permutation_criterion_additive(gf: GF, h1: UniPoly, h2: UniPoly) -> bool:
    """Separable fast path: x -> h1(x) + h2(ax) + a^2 x bijective for all a.

    Requires h2 additive (so the -h2(b) constant drops out of injectivity);
    one occupancy pass per a-value, O(q^2) total.
    """
    if h1.gf is not gf or h2.gf is not gf:
        raise ValueError("mixed field contexts")
    if not h2.is_additive():
        raise ValueError("h2 must be additive")
    q = gf.q
    H1 = h1.eval_all()
    H2 = h2.eval_all()
    xs = np.arange(q, dtype=np.int64)
    for a in range(q):
        v = gf.add_arr(H1, H2[gf.scale_arr(a, xs)])
        v = gf.add_arr(v, gf.scale_arr(gf.mul(a, a), xs))
        if np.bincount(v, minlength=q).max() > 1:
            return False
    return True


def general_spread_check(gf: GF, f: BiPoly, g: BiPoly) -> bool:
    """Whether (x,y) -> (ax + f(x,y), ay + g(x,y)) permutes GF(q)^2 for all a."""
    if f.gf is not gf or g.gf is not gf:
        raise ValueError("mixed field contexts")
    q = gf.q
    F = f.eval_grid()
    Gr = g.eval_grid()
    xs = np.arange(q, dtype=np.int64)
    for a in range(q):
        ax = gf.scale_arr(a, xs)
        U = gf.add_arr(ax[:, None], F)
        V = gf.add_arr(ax[None, :], Gr)
        keys = U * q + V
        if np.bincount(keys.ravel(), minlength=q * q).max() > 1:
            return False
    return True


def flock_check(gf: GF, h1: UniPoly) -> bool:
    """Whether the planes X0 + h1(x) X1 + x X3 = 0 cut the cone into a flock.

    For every pair x != y the intersection line of the two planes is
    enumerated (all q+1 points) and must avoid the degenerate quadric
    z1*z3 = z2^2.  Odd q only.
    """
    if h1.gf is not gf:
        raise ValueError("mixed field contexts")
    if gf.p == 2:
        raise ValueError("flock check is defined for odd q")
    q = gf.q
    H = h1.eval_all()
    lam_sq = gf.pow_arr(np.arange(q, dtype=np.int64), 2)
    for x in range(q):
        for y in range(x + 1, q):
            A = gf.sub(int(H[x]), int(H[y]))
            B = gf.sub(x, y)
            slope = gf.neg(gf.mul(A, gf.inv(B)))        # z3 = slope * z1
            # points (z0, 1, lam, slope) for all lam, plus (0,0,1,0):
            # quadric value is slope - lam^2 on the first family, -1 on the last
            if (lam_sq == slope).any():
                return False
    return True
