import os

import numpy as np
import pytest

from symspread import GF
from symspread.field import TABLE_BUDGET_ENV, is_prime, prime_factors


def test_prime_field_epsilon():
    gf = GF(3, 1)
    assert gf.q == 3
    assert gf.epsilon == 2  # 2 generates GF(3)*


def test_gf27_default_modulus_pins_generator(gf27):
    # t^3 - t + 1, so the residue class n of t satisfies n^3 = n - 1
    assert gf27.modulus == (1, 2, 0, 1)
    n = gf27.epsilon
    assert n == 3
    assert gf27.pow(n, 3) == gf27.sub(n, 1)
    assert gf27.mul(gf27.mul(n, n), n) == gf27.sub(n, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError, match="reducible"):
        GF(2, 3, modulus=[1, 0, 0, 1])  # t^3 + 1 = (t+1)(t^2+t+1)


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError, match="not prime"):
        GF(6, 1)


def test_table_budget_enforced(monkeypatch):
    monkeypatch.setenv(TABLE_BUDGET_ENV, "100")
    with pytest.raises(ValueError, match="budget"):
        GF(11, 2)
    GF(7, 2)  # 49 <= 100 still fine


def test_add_examples(gf3):
    assert gf3.add(1, 2) == 0
    assert gf3.neg(1) == 2


def test_lagrange_pow(fields):
    for q in (9, 27):
        gf = fields[q]
        for x in range(1, q):
            assert gf.pow(x, q - 1) == 1


def test_inverse_and_zero_errors(gf9):
    for x in range(1, 9):
        assert gf9.mul(x, gf9.inv(x)) == 1
    with pytest.raises(ValueError):
        gf9.inv(0)


def test_frobenius_involution_gf9(gf9):
    for x in range(9):
        assert gf9.frobenius(gf9.frobenius(x, 1), 1) == x


def test_frobenius_matches_pow_gf27(gf27):
    for x in range(27):
        assert gf27.frobenius(x, 2) == gf27.pow(x, 9)
        assert gf27.frobenius(x, gf27.h) == x  # i = h is the identity


def test_frobenius_negative_power_rejected(gf9):
    with pytest.raises(ValueError):
        gf9.frobenius(1, -1)


def test_is_square_examples(gf3, gf9, gf27):
    assert not gf3.is_square(2)
    assert not gf27.is_square(gf27.neg(1))   # -1 non-square in GF(3^odd)
    squares9 = {gf9.mul(x, x) for x in range(9)}
    assert gf9.neg(1) in squares9
    assert gf9.is_square(gf9.neg(1))
    for x in range(9):
        assert gf9.is_square(x) == (x in squares9)


def test_is_square_even_characteristic_rejected(gf8):
    with pytest.raises(ValueError):
        gf8.is_square(1)


def test_square_count_odd_fields(fields):
    for q in (3, 5, 7, 9, 27, 81):
        gf = fields[q]
        squares = [x for x in range(q) if gf.is_square(x)]
        assert len(squares) == (q + 1) // 2
        for x in range(q):
            assert gf.is_square(gf.mul(x, x))


def test_abs_trace(gf4, gf8):
    assert gf8.abs_trace(0) == 0
    # GF(4): tr(x) = x + x^2, and tr(generator) = 1
    for x in range(4):
        assert gf4.abs_trace(x) == gf4.add(x, gf4.pow(x, 2))
    assert gf4.abs_trace(gf4.epsilon) == 1
    # GF(8): GF(2)-linear and not identically zero
    traces = [gf8.abs_trace(x) for x in range(8)]
    assert set(traces) == {0, 1}
    for x in range(8):
        for y in range(8):
            assert gf8.abs_trace(gf8.add(x, y)) == gf8.add(
                gf8.abs_trace(x), gf8.abs_trace(y)
            )


def test_alpha(fields):
    assert fields[27].alpha() == 9
    assert fields[8].alpha() == 4
    assert fields[243].alpha() == 27
    assert fields[2187].alpha() == 81
    with pytest.raises(ValueError):
        fields[9].alpha()
    with pytest.raises(ValueError):
        fields[5].alpha()


def test_field_axioms_exhaustive(fields):
    """Associativity and distributivity on every triple, q <= 81."""
    for q in (3, 4, 5, 7, 8, 9, 16, 27, 32, 81):
        gf = fields[q]
        a = np.arange(q).reshape(-1, 1, 1)
        b = np.arange(q).reshape(1, -1, 1)
        c = np.arange(q).reshape(1, 1, -1)
        assert (gf.add_arr(gf.add_arr(a, b), c) == gf.add_arr(a, gf.add_arr(b, c))).all()
        assert (gf.mul_arr(gf.mul_arr(a, b), c) == gf.mul_arr(a, gf.mul_arr(b, c))).all()
        assert (
            gf.mul_arr(a, gf.add_arr(b, c))
            == gf.add_arr(gf.mul_arr(a, b), gf.mul_arr(a, c))
        ).all()


def test_frobenius_distributes(fields):
    for q in (4, 8, 9, 27, 81):
        gf = fields[q]
        a = np.arange(q).reshape(-1, 1)
        b = np.arange(q).reshape(1, -1)
        fa = gf.pow_arr(np.arange(q), gf.p)
        assert (fa[gf.add_arr(a, b)] == gf.add_arr(fa[a], fa[b])).all()
        assert (fa[gf.mul_arr(a, b)] == gf.mul_arr(fa[a], fa[b])).all()


def test_epsilon_order(fields):
    for q in (8, 9, 27):
        gf = fields[q]
        for k in range(2 * (q - 1) + 1):
            assert (gf.pow(gf.epsilon, k) == 1) == (k % (q - 1) == 0)


def test_epsilon_override(gf27):
    # epsilon^3 has order 26 since gcd(3, 26) = 1
    other = int(gf27.exp_table[3])
    gf_alt = GF(3, 3, epsilon=other)
    assert gf_alt.epsilon == other
    assert int(gf_alt.exp_table[1]) == other
    # -1 has order 2: not primitive
    with pytest.raises(ValueError, match="primitive"):
        GF(3, 3, epsilon=gf27.neg(1))


def test_scalar_and_array_paths_agree(fields):
    rng = np.random.default_rng(11)
    for q in (9, 27, 243):
        gf = fields[q]
        a = rng.integers(0, q, 200)
        b = rng.integers(0, q, 200)
        assert (gf.add_arr(a, b) == [gf.add(int(x), int(y)) for x, y in zip(a, b)]).all()
        assert (gf.mul_arr(a, b) == [gf.mul(int(x), int(y)) for x, y in zip(a, b)]).all()
        assert (gf.sub_arr(a, b) == [gf.sub(int(x), int(y)) for x, y in zip(a, b)]).all()


def test_exp_log_tables(gf27):
    assert len(gf27.exp_table) == 26
    for x in range(1, 27):
        assert int(gf27.exp_table[int(gf27.log_table[x])]) == x


def test_to_json_roundtrip(gf27):
    j = gf27.to_json()
    clone = GF(j["p"], j["h"], modulus=j["modulus"], epsilon=j["epsilon"])
    assert clone == gf27
    assert (clone.exp_table == gf27.exp_table).all()


def test_helpers():
    assert is_prime(2) and is_prime(67) and not is_prime(1) and not is_prime(91)
    assert prime_factors(242) == [2, 11]
