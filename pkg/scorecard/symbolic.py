"""
Module loads the symbolic complexity rows (the per-scheme tables of
Setup/Extract/Encrypt/Decrypt costs) and prices them with the cost model.
"""
# == Standard Library imports ==
from fractions import Fraction
from pathlib import Path

# == Third party imports ==
import pandas as pd

# == Local imports ==
from utils.config import load_settings
from utils.csv_loader import CSVLoader
from .cost_model import CostExpr, UnitCosts, cost_eval

SYMBOLIC_TABLE = "symbolic_rows.csv"
TABLE6_SUMS = "table6_sums.csv"
PHASES = ["Setup", "Extract", "Encrypt", "Decrypt"]


def symbolic_rows(table: str, data_dir: str | Path | None = None,
                  costs: UnitCosts | None = None) -> pd.DataFrame:
    """
    Function returns the rows of one symbolic table with a parsed
    ``expr`` and its exact ``cost`` under ``costs`` (default n=80, k=12).
    :param table: "table4" or "table6".
    """
    path = load_settings(data_dir=data_dir).tables_dir / SYMBOLIC_TABLE
    df = CSVLoader(path).load_table(
        ["table", "scheme", "phase", "expr", "printed"])
    df = df[df["table"] == table].drop(columns="table").reset_index(drop=True)
    if df.empty:
        raise KeyError(f"no symbolic rows for {table!r}")
    costs = costs or UnitCosts()
    df["expr"] = df["expr"].map(CostExpr.parse)
    df["cost"] = df["expr"].map(lambda e: cost_eval(e, costs))
    return df


def scheme_sums(rows: pd.DataFrame) -> dict[str, CostExpr]:
    """
    Function adds every phase row of each scheme into one expression.
    """
    sums: dict[str, CostExpr] = {}
    for scheme, expr in zip(rows["scheme"], rows["expr"]):
        sums[scheme] = sums.get(scheme, CostExpr()) + expr
    return sums


def scheme_costs(rows: pd.DataFrame) -> dict[str, Fraction]:
    return {scheme: sum(group.tolist(), Fraction(0))
            for scheme, group in rows.groupby("scheme", sort=False)["cost"]}


def printed_sums(data_dir: str | Path | None = None) -> dict[str, str]:
    path = load_settings(data_dir=data_dir).tables_dir / TABLE6_SUMS
    df = CSVLoader(path).load_table(["scheme", "printed_sum"])
    return dict(zip(df["scheme"], df["printed_sum"]))
