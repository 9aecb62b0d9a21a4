"""
Module prices the Boyen-style per-phase rows of BB1, BB2 and the novel IBE
for one curve family. Unit prices per family are fitted calibration data;
the published cells ship next to them as targets.
"""
# == Standard Library imports ==
from fractions import Fraction
from pathlib import Path

# == Third party imports ==
import pandas as pd

# == Local imports ==
from utils.config import load_settings
from utils.csv_loader import CSVLoader
from utils.errors import UnknownFamilyError
from .cost_model import CostExpr, UnitCosts, cost_eval

FAMILIES = ("SS", "MNT")
BOYEN_SCHEMES = ["bb1", "bb2", "our-ibe"]
BOYEN_PHASES = ["Extract", "Encrypt", "Decrypt"]

PRICES_TABLE = "boyen_prices.csv"
ROWS_TABLE = "boyen_rows.csv"
SUMS_TABLE = "boyen_sums.csv"


def _tables_dir(data_dir) -> Path:
    return load_settings(data_dir=data_dir).tables_dir


def family_costs(family: str, data_dir: str | Path | None = None) -> UnitCosts:
    """
    Function loads the fitted unit prices of one family as UnitCosts
    overrides.
    :raises UnknownFamilyError: Family absent from the calibration file.
    """
    prices = CSVLoader(_tables_dir(data_dir) / PRICES_TABLE).load_table(
        ["family", "term", "price"])
    rows = prices[prices["family"] == family]
    if rows.empty:
        known = sorted(prices["family"].unique())
        raise UnknownFamilyError(f"unknown curve family {family!r}; "
                                 f"expected one of {known}")
    overrides = {term: Fraction(str(price))
                 for term, price in zip(rows["term"], rows["price"])}
    return UnitCosts(n=80, overrides=overrides)


def boyen_rows(data_dir: str | Path | None = None) -> pd.DataFrame:
    return CSVLoader(_tables_dir(data_dir) / ROWS_TABLE).load_table(
        ["scheme", "phase", "expr", *FAMILIES])


def boyen_table(family: str, schemes: list[str] | None = None,
                data_dir: str | Path | None = None) -> pd.DataFrame:
    """
    Function prices every (scheme, phase) op row at 80-bit security.
    :param family: "SS" (supersingular) or "MNT".
    :param schemes: Column subset (default bb1, bb2, our-ibe).
    :return: Frame of exact Fractions, rows Extract/Encrypt/Decrypt/Sum.
    """
    costs = family_costs(family, data_dir)
    schemes = schemes or BOYEN_SCHEMES
    rows = boyen_rows(data_dir)
    table = pd.DataFrame(index=BOYEN_PHASES, columns=schemes, dtype=object)
    for scheme, phase, expr in zip(rows["scheme"], rows["phase"], rows["expr"]):
        if scheme in schemes and phase in BOYEN_PHASES:
            table.loc[phase, scheme] = cost_eval(CostExpr.parse(expr), costs)
    table.loc["Sum"] = [sum(table[s].tolist(), Fraction(0)) for s in schemes]
    table.columns.name = family
    return table


def boyen_targets(family: str,
                  data_dir: str | Path | None = None) -> pd.DataFrame:
    """
    Function returns the published cells of one family in boyen_table's
    shape (Fractions, Sum row included).
    """
    if family not in FAMILIES:
        raise UnknownFamilyError(f"unknown curve family {family!r}")
    tables_dir = _tables_dir(data_dir)
    rows = boyen_rows(data_dir)
    table = rows.pivot(index="phase", columns="scheme", values=family)
    table = table.loc[BOYEN_PHASES, BOYEN_SCHEMES].map(
        lambda v: Fraction(str(v)))
    sums = CSVLoader(tables_dir / SUMS_TABLE).load_table(
        ["family", *BOYEN_SCHEMES]).set_index("family")
    table.loc["Sum"] = [Fraction(str(sums.loc[family, s]))
                        for s in BOYEN_SCHEMES]
    return table
