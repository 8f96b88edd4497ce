"""Exact arithmetic in GF(p^h) with full discrete-log tables.

Elements are plain integers in [0, q): the base-p digit vector of the
polynomial-basis coordinates, little-endian (digit i is the coefficient of
the i-th power of the residue class of the generator t).  All arithmetic
lives on a GF context object; the integer encoding keeps elements hashable,
array-friendly and directly usable as numpy indices.

Scalar operations take and return ints.  The ``*_arr`` variants operate on
numpy integer arrays (any broadcastable shapes) and are the workhorses for
the spread/permutation checks elsewhere in the package.
"""

from __future__ import annotations

import math
import os

import numpy as np

TABLE_BUDGET_ENV = "SYMSPREAD_TABLE_BUDGET"
DEFAULT_TABLE_BUDGET = 1 << 20

# q*q add table is built below this order; larger fields use digit arithmetic.
_ADD_TABLE_MAX_Q = 2048

# Default moduli, little-endian coefficient vectors c0..ch (monic).  GF(27)
# is pinned to t^3 - t + 1 so that the residue class n of t satisfies
# n^3 - n = -1; every other entry is the lexicographically smallest monic
# irreducible, which _find_default_modulus reproduces for fields not listed.
DEFAULT_MODULI = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 7): (2, 0, 1, 0, 0, 0, 0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p) on little-endian int lists, used only for
# modulus validation and table bootstrap
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, modulus, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, modulus, p)


def _poly_rem(a, modulus, p):
    a = list(a)
    dm = len(modulus) - 1
    inv_lead = pow(modulus[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c == 0:
            continue
        factor = (c * inv_lead) % p
        for j in range(dm + 1):
            a[i - dm + j] = (a[i - dm + j] - factor * modulus[j]) % p
    return _poly_trim(a[:dm])


def _all_monic(degree, p):
    """Yield every monic polynomial of the given degree over GF(p)."""
    for low in range(p ** degree):
        coeffs = []
        v = low
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        yield coeffs


def _is_irreducible(coeffs, p) -> bool:
    """Trial division by every lower-degree monic; fine at desk scale."""
    h = len(coeffs) - 1
    if h < 1:
        return False
    for d in range(1, h // 2 + 1):
        for g in _all_monic(d, p):
            if not _poly_rem(coeffs, g, p):
                return False
    return True


def _find_default_modulus(p, h):
    if h == 1:
        return (0, 1)
    for coeffs in _all_monic(h, p):
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """A fully materialized finite field GF(p^h).

    Attributes:
        p, h, q: characteristic, extension degree, order.
        modulus: monic degree-h coefficient vector over GF(p), little-endian.
        epsilon: index of the fixed primitive element.
        exp_table: numpy array, exp_table[k] = epsilon^k, length q-1.
        log_table: numpy array, log_table[x] = k with epsilon^k = x for
            nonzero x; entry 0 is an unused sentinel.

    Immutable after construction and safe to share across threads.
    """

    def __init__(self, p: int, h: int, modulus=None, epsilon: int | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if h < 1:
            raise ValueError(f"extension degree must be >= 1, got {h}")
        q = p ** h
        budget = int(os.environ.get(TABLE_BUDGET_ENV, DEFAULT_TABLE_BUDGET))
        if q > budget:
            raise ValueError(f"field order {q} exceeds table budget {budget}")
        self.p = p
        self.h = h
        self.q = q

        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, h)) or _find_default_modulus(p, h)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != h + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {h}")
        if h >= 1 and not _is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = modulus

        self._pow_p = np.array([p ** i for i in range(h)], dtype=np.int64)
        digits = np.zeros((q, h), dtype=np.int64)
        v = np.arange(q, dtype=np.int64)
        for i in range(h):
            digits[:, i] = v % p
            v //= p
        self._digits = digits
        self._neg_table = ((-digits) % p) @ self._pow_p

        self.epsilon = self._find_primitive(epsilon)
        self._build_log_tables()

        if q <= _ADD_TABLE_MAX_Q:
            s = (digits[:, None, :] + digits[None, :, :]) % p
            self._add_table = (s @ self._pow_p).astype(np.int64)
        else:
            self._add_table = None

    # -- construction helpers ------------------------------------------------

    def _digits_of(self, x):
        out = []
        for _ in range(self.h):
            out.append(x % self.p)
            x //= self.p
        return out

    def _index_of(self, coeffs):
        v = 0
        for c in reversed(coeffs[: self.h] + [0] * (self.h - len(coeffs))):
            v = v * self.p + c
        return v

    def _mul_bootstrap(self, a, b):
        # multiplication before the log tables exist
        ca = _poly_trim(self._digits_of(a))
        cb = _poly_trim(self._digits_of(b))
        if not ca or not cb:
            return 0
        return self._index_of(_poly_mulmod(ca, cb, list(self.modulus), self.p))

    def _order_is_full(self, c):
        for r in prime_factors(self.q - 1):
            if self._pow_bootstrap(c, (self.q - 1) // r) == 1:
                return False
        return True

    def _pow_bootstrap(self, c, e):
        acc, base = 1, c
        while e:
            if e & 1:
                acc = self._mul_bootstrap(acc, base)
            base = self._mul_bootstrap(base, base)
            e >>= 1
        return acc

    def _find_primitive(self, requested):
        if self.q == 2:
            if requested not in (None, 1):
                raise ValueError(f"element {requested} is not primitive")
            return 1
        if requested is not None:
            if not (2 <= requested < self.q) or not self._order_is_full(requested):
                raise ValueError(f"element {requested} is not primitive")
            return requested
        for c in range(2, self.q):
            if self._order_is_full(c):
                return c
        raise AssertionError("no primitive element found")  # unreachable

    def _build_log_tables(self):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -(q), dtype=np.int64)  # sentinel at 0, never read
        cur = 1
        for k in range(q - 1):
            exp[k] = cur
            log[cur] = k
            cur = self._mul_bootstrap(cur, self.epsilon)
        if cur != 1:
            raise AssertionError("primitive element order mismatch")
        self.exp_table = exp
        self.log_table = log

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return int(self._add_table[a, b])
        p, out, mult = self.p, 0, 1
        for _ in range(self.h):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        return int(self._neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = (int(self.log_table[a]) + int(self.log_table[b])) % (self.q - 1)
        return int(self.exp_table[k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("inversion of zero")
        return int(self.exp_table[(-int(self.log_table[a])) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        """a**e; negative e inverts (a nonzero), and 0**0 = 1."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ValueError("inversion of zero")
            return 0
        k = (int(self.log_table[a]) * e) % (self.q - 1)
        return int(self.exp_table[k])

    def frobenius(self, a: int, i: int) -> int:
        """a ** (p ** (i mod h)), the i-th power of the Frobenius map."""
        if i < 0:
            raise ValueError("frobenius power must be >= 0")
        return self.pow(a, self.p ** (i % self.h))

    def is_square(self, a: int) -> bool:
        """Whether a is a square; defined for odd q only."""
        if self.p == 2:
            raise ValueError("is_square is defined only in odd characteristic")
        if a == 0:
            return True
        return int(self.log_table[a]) % 2 == 0

    def abs_trace(self, a: int) -> int:
        """Trace into the prime field GF(p); the result index is < p."""
        acc = 0
        x = a
        for _ in range(self.h):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        return acc

    def alpha(self) -> int:
        """The square root of 3q (q = 3^(2h+1)) or of 2q (q = 2^(2h+1))."""
        if self.p not in (2, 3):
            raise ValueError(f"no alpha parameter in characteristic {self.p}")
        if self.h % 2 == 0:
            raise ValueError(f"q = {self.p}^{self.h} is a square; need an odd exponent")
        return self.p ** ((self.h + 1) // 2)

    # -- array arithmetic (int64 arrays of element indices) -------------------

    def add_arr(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b]
        s = (self._digits[a] + self._digits[b]) % self.p
        return s @ self._pow_p

    def neg_arr(self, a):
        return self._neg_table[a]

    def sub_arr(self, a, b):
        return self.add_arr(a, self._neg_table[b])

    def sum_arr(self, a, axis=-1):
        """Field sum along an axis (digit-wise sum mod p)."""
        s = self._digits[a].sum(axis=axis if axis >= 0 else axis - 1) % self.p
        return s @ self._pow_p

    def mul_arr(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        k = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        out = self.exp_table[k]
        return np.where((a == 0) | (b == 0), 0, out)

    def scale_arr(self, c: int, a):
        """c * a for a scalar c and an array a."""
        a = np.asarray(a)
        if c == 0:
            return np.zeros_like(a)
        k = (self.log_table[a] + int(self.log_table[c])) % (self.q - 1)
        return np.where(a == 0, 0, self.exp_table[k])

    def pow_arr(self, a, e: int):
        """Elementwise a**e for e >= 0 (0**0 = 1)."""
        a = np.asarray(a)
        if e == 0:
            return np.ones_like(a)
        k = (self.log_table[a] * (e % (self.q - 1))) % (self.q - 1)
        return np.where(a == 0, 0, self.exp_table[k])

    # -- misc -----------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def coeffs_of(self, a: int) -> tuple:
        """Little-endian GF(p) digit vector of an element index."""
        return tuple(int(d) for d in self._digits[a])

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "h": self.h,
            "q": self.q,
            "modulus": list(self.modulus),
            "epsilon": self.epsilon,
        }

    def __repr__(self):
        return f"GF({self.p}^{self.h}={self.q}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.h, self.modulus, self.epsilon)
            == (other.p, other.h, other.modulus, other.epsilon)
        )

    def __hash__(self):
        return hash((self.p, self.h, self.modulus, self.epsilon))


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
