from fractions import Fraction

import pytest

from scorecard import boyen_table, boyen_targets
from scorecard.boyen import family_costs
from utils.errors import UnknownFamilyError


@pytest.mark.parametrize("family, sums", [
    ("SS", [432, 332, 330]),
    ("MNT", [Fraction("421.2"), Fraction("321.2"), 321]),
])
def test_sum_row_matches_published_cells(family, sums):
    table = boyen_table(family)

    assert table.loc["Sum"].tolist() == sums


@pytest.mark.parametrize("family", ["SS", "MNT"])
def test_every_cell_matches_its_target(family):
    table = boyen_table(family)
    targets = boyen_targets(family)

    assert (table == targets).all().all()


def test_novel_scheme_is_cheapest_in_both_families():
    for family in ("SS", "MNT"):
        sums = boyen_table(family).loc["Sum"]
        assert sums["our-ibe"] < sums["bb1"]
        assert sums["our-ibe"] < sums["bb2"]


def test_fitted_prices_are_exact_rationals():
    costs = family_costs("MNT")

    assert costs.price("Exp_G1") == Fraction(1, 5)
    assert costs.price("Exp_GT") == Fraction(501, 5)


def test_column_subset():
    table = boyen_table("SS", schemes=["our-ibe"])

    assert list(table.columns) == ["our-ibe"]
    assert table.loc["Decrypt", "our-ibe"] == 222


@pytest.mark.parametrize("call", [family_costs, boyen_targets])
def test_unknown_family(call):
    with pytest.raises(UnknownFamilyError, match="BN"):
        call("BN")
