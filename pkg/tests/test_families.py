import math

import numpy as np
import pytest

from symspread import (
    GF,
    BiPoly,
    FamilySpec,
    UniPoly,
    default_spec,
    g_of,
    ree_tits_fa,
    scaling_conjugate,
    spread_from_g,
    permutation_criterion,
    tits_luneburg_closed_form,
    verify_spread,
)
from symspread.families import validate


def test_ree_tits_polynomial(gf27, gf243):
    g = g_of(FamilySpec("ree-tits"), gf27)
    assert g.terms == {(21, 0): gf27.neg(1), (0, 9): gf27.neg(1)}
    g243 = g_of(FamilySpec("ree-tits"), gf243)
    assert sorted(g243.terms) == [(0, 27), (57, 0)]


def test_penttila_williams_polynomial(gf243):
    g = g_of(FamilySpec("penttila-williams"), gf243)
    assert g.terms == {(9, 0): gf243.neg(1), (0, 81): gf243.neg(1)}


def test_thas_payne_polynomial(gf27):
    n = gf27.epsilon
    g = g_of(FamilySpec("thas-payne", n=n), gf27)
    # x^(1/9) realizes as x^3 and y^(1/3) as y^9 when h = 3
    assert g.terms == {
        (1, 0): gf27.neg(n),
        (3, 0): gf27.neg(gf27.pow(gf27.inv(n), 3)),
        (0, 9): gf27.neg(1),
    }


def test_regular_polynomials(gf9, gf4):
    g = g_of(default_spec(gf9, "regular"), gf9)
    assert g.total_degree == 1
    ge = g_of(default_spec(gf4, "regular"), gf4)
    assert (0, 1) in ge.terms and ge.total_degree == 1


def test_parameter_validation(gf9, gf27, gf8):
    n = gf27.epsilon
    square = gf27.mul(n, n)
    for bad_spec, gf in [
        (FamilySpec("regular", n=square), gf27),
        (FamilySpec("regular", n=0), gf27),
        (FamilySpec("kantor", n=n, i=0), gf27),
        (FamilySpec("kantor", n=n, i=3), gf27),
        (FamilySpec("kantor", n=square, i=1), gf27),
        (FamilySpec("thas-payne", n=gf9.epsilon), gf9),       # needs h > 2
        (FamilySpec("penttila-williams"), gf27),
        (FamilySpec("ree-tits"), gf9),
        (FamilySpec("tits-luneburg"), gf27),
        (FamilySpec("regular"), gf8),                         # even q needs c
        (FamilySpec("regular", c=0), gf8),                    # trace 0
    ]:
        with pytest.raises(ValueError):
            validate(bad_spec, gf)


def test_default_specs_validate(fields):
    for q, name in [
        (3, "regular"), (9, "regular"), (4, "regular"), (8, "regular"),
        (27, "kantor"), (27, "thas-payne"), (243, "penttila-williams"),
        (27, "ree-tits"), (8, "tits-luneburg"),
    ]:
        validate(default_spec(fields[q], name), fields[q])


def test_fa_examples(gf27):
    f0 = ree_tits_fa(gf27, 0)
    assert f0.terms == {21: 1}
    assert f0.is_permutation()
    f1 = ree_tits_fa(gf27, 1)
    assert f1.terms == {21: 1, 9: 1, 1: gf27.neg(1)}
    assert f1.is_permutation()
    assert all(ree_tits_fa(gf27, a).is_permutation() for a in range(27))


def test_fa_wrong_field(gf9):
    with pytest.raises(ValueError):
        ree_tits_fa(gf9, 1)


def test_tits_luneburg_closed_form(gf8):
    alpha = gf8.alpha()
    for a in range(8):
        for x in range(8):
            direct = gf8.add(
                gf8.add(gf8.pow(x, alpha + 1), gf8.pow(gf8.mul(a, x), alpha)),
                gf8.mul(gf8.mul(a, a), x),
            )
            assert tits_luneburg_closed_form(gf8, a, x) == direct


def test_tits_luneburg_closed_form_q32(fields):
    gf = fields[32]
    alpha = gf.alpha()
    rng = np.random.default_rng(59)
    for _ in range(100):
        a, x = int(rng.integers(0, 32)), int(rng.integers(0, 32))
        direct = gf.add(
            gf.add(gf.pow(x, alpha + 1), gf.pow(gf.mul(a, x), alpha)),
            gf.mul(gf.mul(a, a), x),
        )
        assert tits_luneburg_closed_form(gf, a, x) == direct


def test_scaling_conjugate(gf27):
    assert scaling_conjugate(gf27, 5, 1) == 5
    with pytest.raises(ValueError):
        scaling_conjugate(gf27, 5, 0)
    # the rescaling identity, vectorized over x per (a, zeta) pair
    alpha = gf27.alpha()
    xs = np.arange(27)
    for a in range(27):
        fa_vals = ree_tits_fa(gf27, a).eval_all()
        for zeta in range(1, 27):
            b = scaling_conjugate(gf27, a, zeta)
            lhs = gf27.scale_arr(gf27.pow(zeta, 2 * alpha + 3), fa_vals[gf27.scale_arr(gf27.inv(zeta), xs)])
            assert (lhs == ree_tits_fa(gf27, b).eval_all()).all()


def test_square_scaling_orbit(gf27):
    """zeta^(alpha+1) ranges over the nonzero squares, so the conjugates of a
    sweep exactly the coset a * squares."""
    squares = {x for x in range(1, 27) if gf27.is_square(x)}
    for a in (1, gf27.epsilon, 7):
        orbit = {scaling_conjugate(gf27, a, z) for z in range(1, 27)}
        assert orbit == {gf27.mul(a, s) for s in squares}


def test_gcd_invariants(fields):
    for q in (27, 243, 2187):
        alpha = fields[q].alpha()
        assert math.gcd(alpha + 1, q - 1) == 2
        assert math.gcd(q - 1, 2 * alpha - 6) == 2
    for q in (8, 32, 128):
        alpha = fields[q].alpha()
        assert math.gcd(alpha + 1, q - 1) == 1


def test_all_families_give_symplectic_spreads(fields):
    cases = [
        (3, "regular"), (5, "regular"), (9, "regular"), (4, "regular"), (8, "regular"),
        (27, "kantor"), (27, "thas-payne"), (27, "ree-tits"),
        (8, "tits-luneburg"), (32, "tits-luneburg"),
    ]
    for q, name in cases:
        gf = fields[q]
        g = g_of(default_spec(gf, name), gf)
        assert permutation_criterion(gf, g), (q, name)
        assert verify_spread(spread_from_g(gf, g)).is_symplectic, (q, name)


def test_tits_luneburg_q128(fields):
    gf = fields[128]
    g = g_of(FamilySpec("tits-luneburg"), gf)
    assert verify_spread(spread_from_g(gf, g)).is_symplectic
    assert permutation_criterion(gf, g)


def test_kantor_second_power(gf27):
    g = g_of(FamilySpec("kantor", n=gf27.epsilon, i=2), gf27)
    assert sorted(g.terms) == [(9, 0)]
    assert verify_spread(spread_from_g(gf27, g)).is_symplectic
