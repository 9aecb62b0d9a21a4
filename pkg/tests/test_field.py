import pytest

from arithmetic import (ExtContext, FieldContext, OpLedger, ext_exp, ext_inv,
                        ext_mul, fp_exp, fp_inv, fp_mul)
from arithmetic.field import fermat_inverse, schoolbook_ext_mul
from utils.errors import FieldMismatchError, ZeroInversionError


def test_field_context_rejects_composite_modulus():
    with pytest.raises(ValueError, match="not prime"):
        FieldContext(15)


def test_mul_and_inverse_agree_with_fermat():
    F = FieldContext(101)

    for value in range(1, 101):
        a = F(value)
        assert fp_mul(a, fp_inv(a)) == 1
        assert fp_inv(a) == fermat_inverse(a)


def test_inverse_of_zero_raises():
    F = FieldContext(11)

    with pytest.raises(ZeroInversionError, match="inverse of zero"):
        fp_inv(F(0))


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatchError):
        fp_mul(FieldContext(11)(3), FieldContext(13)(3))


def test_equal_operands_count_as_square(ledger):
    F = FieldContext(11)

    fp_mul(F(4), F(4))
    fp_mul(F(4), F(5))

    assert ledger.counters["Sq"] == 1
    assert ledger.counters["Mul"] == 1


def test_exp_of_power_of_two_counts_t_squarings_and_one_mul(ledger):
    # Arrange
    F = FieldContext(101)

    # Act
    result = fp_exp(F(3), 2 ** 5)

    # Assert
    assert result == pow(3, 32, 101)
    assert ledger.top["Exp"] == 1
    assert ledger.counters["Sq"] == 5
    assert ledger.counters["Mul"] == 1


def test_additions_are_not_counted(ledger):
    F = FieldContext(11)

    _ = F(3) + F(4) - F(9) + 2
    _ = -F(5)

    assert sum(ledger.counters.values()) == 0


def test_scalar_ring_arithmetic_is_counted(mini, ledger):
    zr = mini.scalars

    (zr(2) * zr(4)).inverse()

    assert ledger.top["Mul"] == 1
    assert ledger.top["Inv"] == 1


class TestExtension:
    def test_quadratic_uses_minus_one_for_p_3_mod_4(self):
        ext = ExtContext(FieldContext(11), 2)

        assert ext.signed_beta == -1

    def test_karatsuba_matches_schoolbook(self, drbg):
        ext = ExtContext(FieldContext(59), 2)

        with OpLedger():
            for _ in range(50):
                a, b = ext.random(drbg), ext.random(drbg)
                assert ext_mul(a, b) == schoolbook_ext_mul(a, b)

    def test_product_costs_three_base_muls(self, ledger, drbg):
        ext = ExtContext(FieldContext(59), 2)
        a, b = ext([1, 2]), ext([3, 4])

        ext_mul(a, b)

        assert ledger.top["MulK"] == 1
        assert ledger.counters["Mul"] == 3

    def test_inverse_roundtrip(self, drbg):
        ext = ExtContext(FieldContext(59), 2)

        with OpLedger():
            for _ in range(20):
                a = ext.random(drbg)
                if a.is_zero():
                    continue
                assert ext_mul(a, ext_inv(a)).is_one()

    def test_inverse_of_zero_raises(self):
        ext = ExtContext(FieldContext(11), 2)

        with pytest.raises(ZeroInversionError):
            ext_inv(ext.zero())

    def test_exp_matches_repeated_products(self):
        ext = ExtContext(FieldContext(11), 2)
        a = ext([2, 7])

        with OpLedger():
            expected = ext.one()
            for _ in range(13):
                expected = schoolbook_ext_mul(expected, a)
            assert ext_exp(a, 13) == expected
            assert ext_exp(a, 0).is_one()

    def test_field_order_annihilates(self):
        ext = ExtContext(FieldContext(11), 2)

        with OpLedger():
            assert ext_exp(ext([3, 5]), ext.order - 1).is_one()
