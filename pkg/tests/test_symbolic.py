import pytest

from scorecard import UnitCosts, symbolic_rows
from scorecard.symbolic import printed_sums, scheme_costs, scheme_sums


def test_every_table4_row_is_priced():
    rows = symbolic_rows("table4")

    assert len(rows) == 24
    assert set(rows["scheme"]) == {"bf", "sk", "bb1", "bb2", "waters",
                                   "gentry"}
    assert (rows["cost"] > 0).all()


def test_table6_novel_scheme_is_cheapest():
    costs = scheme_costs(symbolic_rows("table6"))

    assert costs["our-ibe"] < costs["bb1"]
    assert costs["our-ibe"] < costs["bb2"]


def test_table6_sums_count_group_exponentiations():
    sums = scheme_sums(symbolic_rows("table6"))

    assert sums["bb1"].counts()["Exp_G1"] == 7
    assert sums["bb2"].counts()["Exp_G1"] == 7
    # the printed sum row says 3Exp_G1/Zq; its four phase rows add to 4
    assert sums["our-ibe"].counts()["Exp_G1"] == 4
    assert "3Exp_G1/Zq" in printed_sums()["our-ibe"]


def test_costs_follow_the_calibration():
    cheap = symbolic_rows("table6", costs=UnitCosts(n=80, k=2))
    dear = symbolic_rows("table6", costs=UnitCosts(n=80, k=12))

    assert (cheap["cost"] <= dear["cost"]).all()


def test_unknown_table_raises():
    with pytest.raises(KeyError, match="table9"):
        symbolic_rows("table9")
