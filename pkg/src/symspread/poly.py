"""Sparse polynomials over GF(q), permutation/additivity tests, interpolation.

UniPoly and BiPoly store ``exponent -> coefficient-index`` maps with no zero
coefficients.  Induced functions are what matter throughout the package, so
``reduce`` folds exponents with the convention x^q = x (never x^0), which
keeps the value at 0 intact and makes reduced representatives unique.

Bivariate interpolation recovers the unique polynomial with both partial
degrees < q from a full q-by-q value grid via two nested univariate Lagrange
passes.  Over GF(q) the product of (x - c) over all c is x^q - x, whose
derivative is -1, which collapses the Lagrange basis to power sums; the
per-field power matrix is cached on first use.
"""

from __future__ import annotations

import numpy as np

from .field import GF


def _same_ctx(a, b):
    if a is not b:
        raise ValueError("mixed field contexts")


def _reduce_exp(e: int, q: int) -> int:
    return e if e == 0 else 1 + (e - 1) % (q - 1)


class UniPoly:
    """Univariate polynomial, terms: {exponent: coefficient index}."""

    __slots__ = ("gf", "terms")

    def __init__(self, gf: GF, terms):
        clean = {}
        for e, c in dict(terms).items():
            e, c = int(e), int(c)
            if e < 0:
                raise ValueError("negative exponent")
            if not 0 <= c < gf.q:
                raise ValueError(f"coefficient {c} outside field of order {gf.q}")
            if c != 0:
                if e in clean:
                    raise ValueError("duplicate exponent")
                clean[e] = c
        self.gf = gf
        self.terms = clean

    @classmethod
    def zero(cls, gf):
        return cls(gf, {})

    @classmethod
    def monomial(cls, gf, e, c=1):
        return cls(gf, {e: c})

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def eval(self, x: int) -> int:
        gf = self.gf
        if not 0 <= x < gf.q:
            raise ValueError("argument outside field")
        acc = 0
        for e, c in self.terms.items():
            acc = gf.add(acc, gf.mul(c, gf.pow(x, e)))
        return acc

    def eval_all(self) -> np.ndarray:
        """Values at every field element, indexed by element."""
        gf = self.gf
        xs = np.arange(gf.q)
        acc = np.zeros(gf.q, dtype=np.int64)
        for e, c in self.terms.items():
            acc = gf.add_arr(acc, gf.scale_arr(c, gf.pow_arr(xs, e)))
        return acc

    def reduce(self) -> "UniPoly":
        gf = self.gf
        out = {}
        for e, c in self.terms.items():
            er = _reduce_exp(e, gf.q)
            out[er] = gf.add(out.get(er, 0), c)
        return UniPoly(gf, {e: c for e, c in out.items() if c})

    def is_permutation(self) -> bool:
        """True iff x -> f(x) is a bijection of GF(q) (occupancy count)."""
        counts = np.bincount(self.eval_all(), minlength=self.gf.q)
        return bool(counts.max(initial=0) <= 1)

    def is_additive(self) -> bool:
        """Exact criterion: every reduced exponent is a power of p."""
        gf = self.gf
        ppowers = {gf.p ** i for i in range(gf.h)}
        return all(e in ppowers for e in self.reduce().terms)

    def __add__(self, other):
        _same_ctx(self.gf, other.gf)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = self.gf.add(out.get(e, 0), c)
        return UniPoly(self.gf, {e: c for e, c in out.items() if c})

    def __neg__(self):
        return UniPoly(self.gf, {e: self.gf.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        _same_ctx(self.gf, other.gf)
        gf = self.gf
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = gf.add(out.get(e, 0), gf.mul(c1, c2))
        return UniPoly(gf, {e: c for e, c in out.items() if c})

    def scale(self, c: int) -> "UniPoly":
        gf = self.gf
        return UniPoly(gf, {e: gf.mul(c, co) for e, co in self.terms.items()})

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(x)); exact, no reduction applied."""
        _same_ctx(self.gf, inner.gf)
        gf = self.gf
        result = UniPoly.zero(gf)
        prev = None
        for e in sorted(self.terms, reverse=True):
            if prev is None:
                result = UniPoly(gf, {0: self.terms[e]})
            else:
                result = result * _poly_pow(inner, prev - e) + UniPoly(gf, {0: self.terms[e]})
            prev = e
        if prev is not None and prev > 0:
            result = result * _poly_pow(inner, prev)
        return result

    def to_json(self):
        return [[e, self.terms[e]] for e in sorted(self.terms)]

    def to_text(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{self.terms[e]}*x^{e}" for e in sorted(self.terms))

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.gf is other.gf
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.gf), frozenset(self.terms.items())))

    def __repr__(self):
        return f"UniPoly({self.to_text()})"


def _poly_pow(f: UniPoly, k: int) -> UniPoly:
    acc = UniPoly(f.gf, {0: 1})
    base = f
    while k:
        if k & 1:
            acc = acc * base
        base = base * base
        k >>= 1
    return acc


class BiPoly:
    """Bivariate polynomial, terms: {(x-exponent, y-exponent): coefficient}."""

    __slots__ = ("gf", "terms")

    def __init__(self, gf: GF, terms):
        clean = {}
        for key, c in dict(terms).items():
            i, j = int(key[0]), int(key[1])
            c = int(c)
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if not 0 <= c < gf.q:
                raise ValueError(f"coefficient {c} outside field of order {gf.q}")
            if c != 0:
                clean[(i, j)] = c
        self.gf = gf
        self.terms = clean

    @classmethod
    def zero(cls, gf):
        return cls(gf, {})

    @classmethod
    def from_uni(cls, h1: UniPoly | None, h2: UniPoly | None):
        """h1(x) + h2(y) as a bivariate polynomial."""
        if h1 is None and h2 is None:
            raise ValueError("need at least one part")
        gf = (h1 or h2).gf
        if h1 is not None and h2 is not None:
            _same_ctx(h1.gf, h2.gf)
        terms = {}
        for e, c in (h1.terms if h1 else {}).items():
            terms[(e, 0)] = c
        for e, c in (h2.terms if h2 else {}).items():
            key = (0, e)
            if key in terms:
                c = gf.add(terms[key], c)
            terms[key] = c
        return cls(gf, {k: c for k, c in terms.items() if c})

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def eval(self, x: int, y: int) -> int:
        gf = self.gf
        if not (0 <= x < gf.q and 0 <= y < gf.q):
            raise ValueError("argument outside field")
        acc = 0
        for (i, j), c in self.terms.items():
            acc = gf.add(acc, gf.mul(c, gf.mul(gf.pow(x, i), gf.pow(y, j))))
        return acc

    def eval_grid(self) -> np.ndarray:
        """Full value grid W with W[x, y] = g(x, y)."""
        gf = self.gf
        xs = np.arange(gf.q)
        acc = np.zeros((gf.q, gf.q), dtype=np.int64)
        for (i, j), c in self.terms.items():
            col = gf.scale_arr(c, gf.pow_arr(xs, i))
            row = gf.pow_arr(xs, j)
            acc = gf.add_arr(acc, gf.mul_arr(col[:, None], row[None, :]))
        return acc

    def reduce(self) -> "BiPoly":
        gf = self.gf
        out = {}
        for (i, j), c in self.terms.items():
            key = (_reduce_exp(i, gf.q), _reduce_exp(j, gf.q))
            out[key] = gf.add(out.get(key, 0), c)
        return BiPoly(gf, {k: c for k, c in out.items() if c})

    def separable_parts(self) -> tuple[UniPoly, UniPoly] | None:
        """(h1, h2) with g = h1(x) + h2(y), or None if g has cross terms."""
        h1, h2 = {}, {}
        for (i, j), c in self.terms.items():
            if i and j:
                return None
            if j == 0:
                h1[i] = c
            else:
                h2[j] = c
        return UniPoly(self.gf, h1), UniPoly(self.gf, h2)

    def to_json(self):
        return [[i, j, self.terms[(i, j)]] for i, j in sorted(self.terms)]

    def to_text(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{self.terms[(i, j)]}*x^{i}*y^{j}" for i, j in sorted(self.terms)
        )

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.gf is other.gf
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.gf), frozenset(self.terms.items())))

    def __repr__(self):
        return f"BiPoly({self.to_text()})"


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

def _power_matrix(gf: GF) -> np.ndarray:
    """P[c-1, e-1] = c^(q-1-e) for nonzero c and 1 <= e <= q-2, cached per field."""
    if not hasattr(gf, "_interp_powers"):
        q = gf.q
        cs = np.arange(1, q)
        cols = [gf.pow_arr(cs, q - 1 - e) for e in range(1, q - 1)]
        gf._interp_powers = np.stack(cols, axis=1)
    return gf._interp_powers


def _interp_batch(gf: GF, values: np.ndarray) -> np.ndarray:
    """Row-wise univariate interpolation: (m, q) values -> (m, q) coefficients.

    coeffs[0] = w(0); coeffs[e] = -sum_{c != 0} w(c) c^(q-1-e) for the middle
    range; coeffs[q-1] = -sum_c w(c).
    """
    q = gf.q
    values = np.asarray(values)
    m = values.shape[0]
    P = _power_matrix(gf)
    coeffs = np.zeros((m, q), dtype=np.int64)
    coeffs[:, 0] = values[:, 0]
    vnz = values[:, 1:]
    for e in range(1, q - 1):
        prod = gf.mul_arr(vnz, P[None, :, e - 1])
        coeffs[:, e] = gf.neg_arr(gf.sum_arr(prod, axis=1))
    coeffs[:, q - 1] = gf.neg_arr(gf.sum_arr(values, axis=1))
    return coeffs


def interpolate_uni(gf: GF, values) -> UniPoly:
    """The unique polynomial of degree < q through all q points."""
    values = np.asarray(values, dtype=np.int64)
    if values.shape != (gf.q,):
        raise ValueError(f"need one value per field element, got shape {values.shape}")
    coeffs = _interp_batch(gf, values[None, :])[0]
    return UniPoly(gf, {e: int(c) for e, c in enumerate(coeffs) if c})


def interpolate_bi(gf: GF, grid) -> BiPoly:
    """The unique polynomial with both partial degrees < q matching the grid.

    grid[u][v] is the required value at (u, v), for every pair of element
    indices; two nested univariate passes (rows over v, then columns over u).
    """
    grid = np.asarray(grid, dtype=np.int64)
    if grid.shape != (gf.q, gf.q):
        raise ValueError(f"need a full {gf.q}x{gf.q} grid, got shape {grid.shape}")
    row_coeffs = _interp_batch(gf, grid)          # [u, j]
    col_coeffs = _interp_batch(gf, row_coeffs.T)  # [j, i]
    terms = {}
    for j in range(gf.q):
        for i in np.nonzero(col_coeffs[j])[0]:
            terms[(int(i), j)] = int(col_coeffs[j, i])
    return BiPoly(gf, terms)
