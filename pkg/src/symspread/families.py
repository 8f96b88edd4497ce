"""Constructors for the known symplectic-spread families of PG(3,q).

Each family is a generating polynomial g(x, y); the spread it generates is
spread_from_g(gf, g_of(spec, gf)).  Fractional exponents in the Thas-Payne
family are inverse Frobenius powers: x^(1/3) means the unique cube root
x^(3^(h-1)), which is well defined because Frobenius is bijective.

Also here: the low-degree permutation family attached to the Ree-Tits slice
(one polynomial per field element a, of degree about sqrt(q)), the closed
form that proves the Tits-Lueneburg family, and the scaling map that carries
the permutation property between members of the Ree-Tits family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import GF
from .poly import BiPoly, UniPoly

FAMILY_NAMES = (
    "regular",
    "kantor",
    "thas-payne",
    "penttila-williams",
    "ree-tits",
    "tits-luneburg",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its parameters (element indices / Frobenius power).

    regular:       odd q needs n (nonzero non-square); even q needs c with
                   absolute trace 1.
    kantor:        n non-square and a Frobenius power index 0 < i < h.
    thas-payne:    q = 3^h with h > 2, n non-square.
    penttila-williams: q = 3^5 only, no parameters.
    ree-tits:      q = 3^(2h+1), no parameters.
    tits-luneburg: q = 2^(2h+1), no parameters.
    """

    name: str
    n: int | None = None
    c: int | None = None
    i: int | None = None

    def to_json(self):
        out = {"family": self.name}
        for k in ("n", "c", "i"):
            v = getattr(self, k)
            if v is not None:
                out[k] = v
        return out


def default_spec(gf: GF, name: str) -> FamilySpec:
    """Canonical parameters: n = the primitive element (always a non-square),
    c = the smallest index of trace 1, i = 1."""
    if name == "regular":
        if gf.p == 2:
            c = next(x for x in range(gf.q) if gf.abs_trace(x) == 1)
            return FamilySpec("regular", c=c)
        return FamilySpec("regular", n=gf.epsilon)
    if name == "kantor":
        return FamilySpec("kantor", n=gf.epsilon, i=1)
    if name == "thas-payne":
        return FamilySpec("thas-payne", n=gf.epsilon)
    if name in ("penttila-williams", "ree-tits", "tits-luneburg"):
        return FamilySpec(name)
    raise ValueError(f"unknown family {name!r}")


def _require_nonsquare(gf, n):
    if n is None:
        raise ValueError("parameter n is required")
    if not 0 <= n < gf.q:
        raise ValueError("parameter n outside field")
    if n == 0 or gf.is_square(n):
        raise ValueError(f"parameter n = {n} must be a nonzero non-square")


def _require_odd_power_field(gf, p):
    if gf.p != p or gf.h % 2 == 0 or gf.h < 3:
        raise ValueError(f"family needs q = {p}^(2h+1) with h >= 1, got {gf.p}^{gf.h}")


def validate(spec: FamilySpec, gf: GF) -> None:
    """Eager parameter validation; raises ValueError on any mismatch."""
    name = spec.name
    if name == "regular":
        if gf.p == 2:
            if spec.c is None:
                raise ValueError("even-q regular family needs parameter c")
            if gf.abs_trace(spec.c) != 1:
                raise ValueError(f"parameter c = {spec.c} must have absolute trace 1")
        else:
            _require_nonsquare(gf, spec.n)
    elif name == "kantor":
        if gf.p == 2:
            raise ValueError("kantor family needs odd q")
        _require_nonsquare(gf, spec.n)
        if spec.i is None or not 0 < spec.i < gf.h:
            raise ValueError(f"kantor Frobenius power must satisfy 0 < i < {gf.h}")
    elif name == "thas-payne":
        if gf.p != 3 or gf.h <= 2:
            raise ValueError(f"thas-payne needs q = 3^h with h > 2, got {gf.p}^{gf.h}")
        _require_nonsquare(gf, spec.n)
    elif name == "penttila-williams":
        if (gf.p, gf.h) != (3, 5):
            raise ValueError("penttila-williams lives only in GF(3^5)")
    elif name == "ree-tits":
        _require_odd_power_field(gf, 3)
    elif name == "tits-luneburg":
        _require_odd_power_field(gf, 2)
    else:
        raise ValueError(f"unknown family {name!r}")


def g_of(spec: FamilySpec, gf: GF) -> BiPoly:
    """The generating polynomial of the family over the given field."""
    validate(spec, gf)
    name = spec.name
    minus_one = gf.neg(1)
    if name == "regular":
        if gf.p == 2:
            return BiPoly(gf, {(1, 0): spec.c, (0, 1): 1})
        return BiPoly(gf, {(1, 0): gf.neg(spec.n)})
    if name == "kantor":
        return BiPoly(gf, {(gf.p ** spec.i, 0): gf.neg(spec.n)})
    if name == "thas-payne":
        ninth_root_exp = 3 ** (gf.h - 2)     # x^(1/9)
        cube_root_exp = 3 ** (gf.h - 1)      # y^(1/3)
        coeff = gf.neg(gf.pow(gf.inv(spec.n), ninth_root_exp))
        terms = {(1, 0): gf.neg(spec.n), (0, cube_root_exp): minus_one}
        key = (ninth_root_exp, 0)
        terms[key] = gf.add(terms.get(key, 0), coeff)
        return BiPoly(gf, {k: v for k, v in terms.items() if v})
    if name == "penttila-williams":
        return BiPoly(gf, {(9, 0): minus_one, (0, 81): minus_one})
    if name == "ree-tits":
        a = gf.alpha()
        return BiPoly(gf, {(2 * a + 3, 0): minus_one, (0, a): minus_one})
    if name == "tits-luneburg":
        a = gf.alpha()
        return BiPoly(gf, {(a + 1, 0): 1, (0, a): 1})
    raise AssertionError(name)


def ree_tits_fa(gf: GF, a: int) -> UniPoly:
    """The polynomial x^(2*alpha+3) + (a*x)^alpha - a^2*x with alpha = sqrt(3q)."""
    if gf.p != 3 or gf.h % 2 == 0:
        raise ValueError(f"needs q = 3^(2h+1), got {gf.p}^{gf.h}")
    alpha = gf.alpha()
    terms = {2 * alpha + 3: 1}
    c_alpha = gf.pow(a, alpha)
    if c_alpha:
        terms[alpha] = c_alpha
    c_lin = gf.neg(gf.mul(a, a))
    if c_lin:
        terms[1] = c_lin
    return UniPoly(gf, terms)


def tits_luneburg_closed_form(gf: GF, a: int, x: int) -> int:
    """(x + a^alpha)^(alpha+1) + a^(alpha+2); equals x^(alpha+1) + (ax)^alpha + a^2 x."""
    if gf.p != 2 or gf.h % 2 == 0:
        raise ValueError(f"needs q = 2^(2h+1), got {gf.p}^{gf.h}")
    alpha = gf.alpha()
    s = gf.add(x, gf.pow(a, alpha))
    return gf.add(gf.pow(s, alpha + 1), gf.pow(a, alpha + 2))


def scaling_conjugate(gf: GF, a: int, zeta: int) -> int:
    """The member index a * zeta^(alpha+1) reached by rescaling x by 1/zeta.

    Satisfies zeta^(2*alpha+3) * f_a(x/zeta) = f_(that member)(x) pointwise,
    which transports the permutation property along square scalings since
    gcd(alpha+1, q-1) = 2.
    """
    if zeta == 0:
        raise ValueError("zeta must be nonzero")
    if gf.p != 3 or gf.h % 2 == 0:
        raise ValueError(f"needs q = 3^(2h+1), got {gf.p}^{gf.h}")
    return gf.mul(a, gf.pow(zeta, gf.alpha() + 1))
