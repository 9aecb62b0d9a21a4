from fractions import Fraction

import pytest

from scorecard import (CostExpr, UnitCosts, cost_eval, miller_cost,
                       pairing_cost, ratio_pairing_cost, scalar_mul_cost)
from scorecard.cost_model import factor_embedding_degree
from utils.errors import ParameterError, UnpricedTermError


class TestUnitPrices:
    def test_point_operations_at_unit_square_cost(self):
        costs = UnitCosts()

        assert costs.price("ECADD") == 14
        # printed as 13; 7 Mu + 5 Sq is 12 at Mu = Sq
        assert costs.price("ECDBL") == 12

    def test_aliases_share_prices(self):
        costs = UnitCosts()

        assert costs.price("Exp_G1") == costs.price("ScalarMul")
        assert costs.price("Mul_GT") == costs.price("MulK")
        assert costs.price("Pairing") == costs.price("Pair")

    def test_inversion_prices(self):
        costs = UnitCosts(n=80, k=12)

        assert costs.price("Inv_Zq") == 80
        assert costs.price("InvK") == 4 * costs.price("MulK")
        assert costs.price("Div_GT") == costs.price("InvK") + \
            costs.price("MulK")

    def test_extension_product_follows_karatsuba_factor(self):
        assert UnitCosts(k=12).ext_factor == 45
        assert UnitCosts(k=2).ext_factor == 3

    def test_overrides_replace_derived_prices_by_alias(self):
        costs = UnitCosts(overrides={"Exp_G1": "0.2", "Pair": 220})

        assert costs.price("ScalarMul") == Fraction(1, 5)
        assert costs.price("Pair") == 220

    def test_unknown_term(self):
        with pytest.raises(UnpricedTermError, match="Frobenius"):
            UnitCosts().price("Frobenius")


class TestClosedForms:
    def test_scalar_multiplication_is_fifty_thirds_per_bit(self):
        # the published 53/3 (n - 1) uses ECDBL = 13
        assert scalar_mul_cost(80) == Fraction(50, 3) * 79

    def test_miller_loop_at_80_bits_embedding_12(self):
        assert miller_cost(80, 12) == 28480

    def test_pairing_adds_one_final_exponentiation(self):
        assert pairing_cost(80, 12) == 28480 + 120

    def test_ratio_is_cheaper_than_two_pairings(self):
        assert ratio_pairing_cost(80, 12) == 80 * 442 + 120
        assert ratio_pairing_cost(80, 12) < 2 * pairing_cost(80, 12)

    @pytest.mark.parametrize("k, expected", [(1, (0, 0)), (2, (1, 0)),
                                             (6, (1, 1)), (12, (2, 1))])
    def test_embedding_degree_factoring(self, k, expected):
        assert factor_embedding_degree(k) == expected

    @pytest.mark.parametrize("k", [0, 5, 10])
    def test_embedding_degree_outside_two_three_smooth(self, k):
        with pytest.raises(ParameterError):
            factor_embedding_degree(k)

    def test_security_level_too_small(self):
        with pytest.raises(ParameterError, match="security level"):
            UnitCosts(n=1)


class TestCostExpr:
    def test_parse_merges_terms_and_defaults_count_to_one(self):
        expr = CostExpr.parse("2ScalarMul + Pair + 1ScalarMul")

        assert expr.counts() == {"Pair": 1, "ScalarMul": 3}

    @pytest.mark.parametrize("text", ["", "0", "  "])
    def test_empty_forms(self, text):
        assert CostExpr.parse(text) == CostExpr()
        assert str(CostExpr.parse(text)) == "0"

    def test_fractional_counts(self):
        assert CostExpr.parse("1/3ECADD").counts() == {"ECADD": Fraction(1, 3)}

    def test_unreadable_term(self):
        with pytest.raises(ValueError, match="cannot parse"):
            CostExpr.parse("2ScalarMul+x y")

    def test_pricing_is_linear(self):
        costs = UnitCosts()
        first = CostExpr.parse("2ScalarMul+1Pair")
        second = CostExpr.parse("1Exp_GT+3Mul_Zq")

        assert cost_eval(first + second, costs) == \
            cost_eval(first, costs) + cost_eval(second, costs)

    def test_string_input_is_parsed(self):
        costs = UnitCosts()

        assert cost_eval("2Mu+1Sq", costs) == 3
