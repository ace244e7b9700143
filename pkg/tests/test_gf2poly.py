import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ngramhash import gf2poly
from ngramhash.gf2poly import (
    NEG_INF,
    Modulus,
    degree,
    from_monomial_str,
    is_irreducible,
    mod,
    monomial_str,
    mul,
    mul_mod,
    rotate_left,
    shift_mod,
)

TABLE_IRREDUCIBLE = [
    "x^10+x^3+1",
    "x^15+x+1",
    "x^20+x^3+1",
    "x^25+x^3+1",
    "x^30+x^6+x^4+x+1",
    "x^19+x^5+x^2+x+1",
]


def naive_mul_mod(a, b, p):
    return mod(mul(a, b), p)


def test_degree():
    assert degree(0) is NEG_INF
    assert degree(1) == 0
    assert degree(0b10000001001) == 10  # 1 + x^3 + x^10


def test_degree_sentinel_orders_below_everything():
    assert NEG_INF < 0
    assert NEG_INF < degree(1)


class TestShiftMod:
    def test_x_times_x_mod_deg2(self):
        p = Modulus.irreducible(0b111)
        assert shift_mod(0b10, p) == 0b11

    def test_zero(self):
        assert shift_mod(0, Modulus.cyclic(3)) == 0

    def test_cyclic_wraparound(self):
        assert shift_mod(0b100, Modulus.cyclic(3)) == 0b1

    def test_rejects_wide_operand(self):
        with pytest.raises(ValueError):
            shift_mod(0b1000, Modulus.irreducible(0b1011))


class TestMulMod:
    def test_square_of_x_plus_1_cyclic(self):
        p = Modulus.cyclic(3)
        assert mul_mod(0b11, 0b11, p) == 0b101

    def test_identity(self):
        p = Modulus.irreducible(0b1011)
        for a in range(8):
            assert mul_mod(a, 1, p) == a

    def test_all_ones_annihilates_x_plus_1_cyclic(self):
        # (x+1)(x^{L-1}+...+x+1) = x^L+1 = 0 in the cyclic ring
        assert mul_mod(0b11, 0b111, Modulus.cyclic(3)) == 0

    @given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
    def test_commutes_and_distributes(self, a, b, c):
        p = Modulus.irreducible(0b1011)
        assert mul_mod(a, b, p) == mul_mod(b, a, p)
        assert mul_mod(a, b ^ c, p) == mul_mod(a, b, p) ^ mul_mod(a, c, p)

    @given(st.integers(0, 255), st.integers(0, 255))
    def test_against_naive_oracle(self, a, b):
        p = Modulus.irreducible(0b100011011)  # AES polynomial, degree 8
        assert mul_mod(a, b, p) == naive_mul_mod(a, b, p.poly)

    @given(st.integers(0, 7), st.integers(0, 8))
    def test_iterated_shift_is_power_multiplication(self, a, k):
        p = Modulus.irreducible(0b1011)
        xs = a
        for _ in range(k):
            xs = shift_mod(xs, p)
        xk = mod(1 << k, p.poly)
        assert xs == mul_mod(a, xk, p)


class TestRotateLeft:
    def test_wraparound(self):
        assert rotate_left(0b100, 1, 3) == 0b1

    def test_full_rotation_is_identity(self):
        for a in range(8):
            assert rotate_left(a, 3, 3) == a

    def test_one_rotated_twice(self):
        assert rotate_left(1, 2, 5) == 0b100

    @pytest.mark.parametrize("L", range(1, 9))
    def test_matches_cyclic_multiplication_exhaustively(self, L):
        p = Modulus.cyclic(L)
        for a in range(1 << L):
            for k in range(2 * L + 1):
                xk = mod(1 << (k % L), p.poly)
                assert rotate_left(a, k, L) == mul_mod(a, xk, p)

    @given(st.integers(9, 16), st.data())
    def test_matches_cyclic_multiplication_random(self, L, data):
        a = data.draw(st.integers(0, (1 << L) - 1))
        k = data.draw(st.integers(0, 2 * L))
        p = Modulus.cyclic(L)
        xk = mod(1 << (k % L), p.poly)
        assert rotate_left(a, k, L) == mul_mod(a, xk, p)


class TestIrreducible:
    @pytest.mark.parametrize("poly", TABLE_IRREDUCIBLE)
    def test_published_polynomials(self, poly):
        assert is_irreducible(from_monomial_str(poly))

    @pytest.mark.parametrize("L", range(2, 21))
    def test_cyclic_moduli_are_reducible(self, L):
        assert not is_irreducible((1 << L) | 1)

    def test_x_squared(self):
        assert not is_irreducible(0b100)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            is_irreducible(1)

    @pytest.mark.parametrize("deg", range(1, 9))
    def test_against_trial_division(self, deg):
        def by_trial_division(p):
            for d in range(2, 1 << (degree(p) // 2 + 1)):
                if degree(d) >= 1 and mod(p, d) == 0:
                    return False
            return True

        for p in range(1 << deg, 1 << (deg + 1)):
            assert is_irreducible(p) == by_trial_division(p), monomial_str(p)


class TestModulus:
    def test_irreducible_constructor_validates(self):
        with pytest.raises(ValueError):
            Modulus.irreducible(0b101)  # x^2+1 = (x+1)^2

    def test_cyclic_shape_enforced(self):
        with pytest.raises(ValueError):
            Modulus(0b1011, 3, "cyclic")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            Modulus(0b111, 2, "prime")


class TestTextForms:
    def test_hex_roundtrip(self):
        p = from_monomial_str("x^19+x^5+x^2+x+1")
        assert gf2poly.from_hex(gf2poly.to_hex(p)) == p
        assert gf2poly.to_hex(p) == "0x80027"

    def test_monomial_roundtrip(self):
        for a in (0, 1, 0b10, 0b100011011, 0b10000001001):
            assert from_monomial_str(monomial_str(a)) == a

    @settings(max_examples=50)
    @given(st.integers(0, (1 << 32) - 1))
    def test_monomial_roundtrip_random(self, a):
        assert from_monomial_str(monomial_str(a)) == a
