"""
Module builds the dataframes the command line prints or saves: the bench
ledger report and every classification or comparison table, each table
with a PASS/FAIL flag against the published cells.
"""
# == Standard Library imports ==
import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

# == Third party imports ==
import pandas as pd

# == Local imports ==
from arithmetic import OpLedger
from scorecard import (boyen_table, boyen_targets, final_classification,
                       load_rank_matrix, property_classification,
                       rank_aggregate, specific_classification, symbolic_rows)
from scorecard.ranking import (COMPLEXITY_TABLE, SCHEME_COLUMNS,
                               SCHEME_LABELS, SECURITY_TABLE, load_pins)
from scorecard.symbolic import PHASES, printed_sums, scheme_costs, scheme_sums
from utils.config import load_settings
from utils.csv_loader import CSVLoader

# == bench report ==

# fixed column set of the bench CSV
BENCH_COLUMNS = [
    "scheme", "phase", "trials", "Pairing", "PairingRatio", "pairing_equiv",
    "MillerLoop", "FinalExp", "ScalarMul", "MapToPoint", "Exp", "Inv", "Mul",
    "Sq", "MulK", "SqK", "InvK", "ECADD", "ECDBL", "base_mul_inclusive",
    "median_ms",
]
# columns read from the top-level view; the others are inclusive
TOP_LEVEL_COLUMNS = ("Pairing", "PairingRatio", "ScalarMul", "MapToPoint",
                     "Exp", "Inv", "MulK", "InvK", "ECADD")
INCLUSIVE_COLUMNS = ("MillerLoop", "FinalExp", "Mul", "Sq", "SqK", "ECDBL")


def _per_trial(total: int, trials: int) -> int | float:
    return total // trials if total % trials == 0 else round(total / trials, 2)


def bench_rows(scheme: str, ledger: OpLedger, trials: int,
               median_ms: dict[str, float]) -> list[dict]:
    """
    Function turns the merged ledger of ``trials`` runs into one row per
    phase; counts are per trial.
    """
    rows = []
    for phase, snap in ledger.phases.items():
        row = {"scheme": scheme, "phase": phase, "trials": trials}
        for kind in TOP_LEVEL_COLUMNS:
            row[kind] = _per_trial(snap.top[kind], trials)
        for kind in INCLUSIVE_COLUMNS:
            row[kind] = _per_trial(snap.counters[kind], trials)
        row["pairing_equiv"] = _per_trial(
            snap.top["Pairing"] + 2 * snap.top["PairingRatio"], trials)
        row["base_mul_inclusive"] = _per_trial(
            snap.counters["Mul"] + snap.counters["Sq"], trials)
        row["median_ms"] = round(median_ms.get(phase, 0.0), 3)
        rows.append(row)
    return rows


def bench_frame(rows: list[dict]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)


# == output ==

def _cell(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    return value


def frame_to_csv(frame: pd.DataFrame, fpath_out: str | Path | None = None) -> str:
    """
    Function writes a frame as UTF-8 CSV with a header row and LF line
    endings; returns the text when no path is given.
    """
    frame = frame.map(_cell)
    if fpath_out is None:
        buffer = io.StringIO()
        frame.to_csv(path_or_buf=buffer, index=False, sep=",",
                     quoting=csv.QUOTE_ALL, lineterminator="\n")
        return buffer.getvalue()
    frame.to_csv(
        path_or_buf=fpath_out,
        index=False,
        encoding="utf-8",
        sep=",",
        quoting=csv.QUOTE_ALL,
        lineterminator="\n",
    )
    return ""


def frame_to_text(frame: pd.DataFrame) -> str:
    return frame.map(_cell).to_string(index=False)


# == tables ==

@dataclass
class TableResult:
    """
    Dataclass for one rendered table and its check against the published
    cells.
    """
    name: str
    title: str
    frame: pd.DataFrame
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


def _labelled(frame: pd.DataFrame, label: str = "row") -> pd.DataFrame:
    out = frame.rename(columns=SCHEME_LABELS).copy()
    out.columns.name = None
    out.index.name = label
    return out.reset_index()


def _check_rows(table: str, frame: pd.DataFrame,
                rows: dict[str, str], pins: pd.DataFrame) -> tuple[bool, str]:
    """
    Function compares rows of ``frame`` (scheme columns) with pinned rows.
    ``rows`` maps a frame row label to the pin row label.
    """
    failures = []
    for frame_row, pin_row in rows.items():
        expected = pins.loc[(table, pin_row), SCHEME_COLUMNS].astype(int)
        actual = frame.loc[frame_row, SCHEME_COLUMNS].astype(int)
        if list(actual) != list(expected):
            failures.append(f"{frame_row}: {list(actual)} != {list(expected)}")
    return not failures, "; ".join(failures)


def _rank_table(name: str, title: str, fname: str, data_dir) -> TableResult:
    matrix = load_rank_matrix(fname, data_dir)
    sums, classes = rank_aggregate(matrix)
    frame = pd.concat([matrix.frame,
                       pd.DataFrame([sums, classes], index=["Sum", "Class"])])
    passed, detail = _check_rows(name, frame, {"Sum": "Sum", "Class": "Class"},
                                 load_pins(data_dir))
    return TableResult(name, title, _labelled(frame, "criterion"), passed, detail)


def _final_table(data_dir) -> TableResult:
    frame = final_classification(load_rank_matrix(SECURITY_TABLE, data_dir),
                                 load_rank_matrix(COMPLEXITY_TABLE, data_dir))
    passed, detail = _check_rows("final", frame,
                                 {"Sum": "Sum", "Class1": "Class"},
                                 load_pins(data_dir))
    return TableResult("final", "Final classification", _labelled(frame),
                       passed, detail)


def _properties_table(data_dir) -> TableResult:
    security = load_rank_matrix(SECURITY_TABLE, data_dir)
    complexity = load_rank_matrix(COMPLEXITY_TABLE, data_dir)
    specific = specific_classification(security, complexity)
    frame = pd.concat([property_classification(complexity),
                       specific.loc[["Specific class"]]])
    pins = load_pins(data_dir)
    passed, detail = _check_rows(
        "properties", frame,
        {"Hierarchical": "Hierarchical", "Sum": "Sum", "Class2": "Class"},
        pins)
    specific_ok, specific_detail = _check_rows(
        "specific", frame, {"Specific class": "Class"}, pins)
    detail = "; ".join(d for d in (detail, specific_detail) if d)
    return TableResult("properties", "Property classification",
                       _labelled(frame, "criterion"), passed and specific_ok,
                       detail)


def _symbolic_table(table: str, data_dir) -> tuple[pd.DataFrame, pd.DataFrame,
                                                 dict[str, Fraction]]:
    rows = symbolic_rows(table, data_dir)
    frame = rows.pivot(index="scheme", columns="phase", values="expr")
    frame = frame.loc[rows["scheme"].unique(), PHASES].map(str)
    costs = scheme_costs(rows)
    frame["cost_n80_k12"] = [costs[s] for s in frame.index]
    frame.index = [SCHEME_LABELS.get(s, s) for s in frame.index]
    frame.index.name = "scheme"
    frame.columns.name = None
    return frame, rows, costs


def _table4(data_dir) -> TableResult:
    frame, _, _ = _symbolic_table("table4", data_dir)
    return TableResult("table4", "Per-phase complexity rows",
                       frame.reset_index(), True,
                       "every row priced at n=80, k=12")


def _table6(data_dir) -> TableResult:
    frame, rows, costs = _symbolic_table("table6", data_dir)
    sums = scheme_sums(rows)
    printed = printed_sums(data_dir)
    frame["Sum"] = [str(sums[s]) for s in rows["scheme"].unique()]
    frame["printed_sum"] = [printed.get(s, "") for s in rows["scheme"].unique()]
    ours = costs["our-ibe"]
    passed = costs["bb1"] > ours and costs["bb2"] > ours
    detail = "" if passed else "our-ibe is not the cheapest of the three"
    return TableResult("table6", "BB1, BB2 and the novel IBE",
                       frame.reset_index(), passed, detail)


def _boyen(family: str, data_dir) -> TableResult:
    computed = boyen_table(family, data_dir=data_dir)
    targets = boyen_targets(family, data_dir=data_dir)
    mismatches = [f"{phase}/{scheme}"
                  for phase in computed.index for scheme in computed.columns
                  if computed.loc[phase, scheme] != targets.loc[phase, scheme]]
    frame = computed.rename(columns=SCHEME_LABELS)
    frame.columns.name = None
    frame.index.name = "phase"
    return TableResult(f"boyen-{family.lower()}",
                       f"{family} @ 80-bit security level", frame.reset_index(),
                       not mismatches, ", ".join(mismatches))


def _verbatim(name: str, title: str, fname: str, columns: list[str],
              data_dir) -> TableResult:
    path = load_settings(data_dir=data_dir).tables_dir / fname
    frame = CSVLoader(path).load_table(columns)
    return TableResult(name, title, frame, True, "rendered from data")


def build_table(name: str, data_dir: str | Path | None = None) -> TableResult:
    """
    Function builds one named table.
    :param name: One of run_config.REPORT_TABLES.
    """
    if name == "table1":
        return _rank_table("table1", "Classification in the level of security",
                           SECURITY_TABLE, data_dir)
    if name == "table5":
        return _rank_table("table5", "Classification in the level of complexity",
                           COMPLEXITY_TABLE, data_dir)
    if name == "final":
        return _final_table(data_dir)
    if name == "properties":
        return _properties_table(data_dir)
    if name == "table4":
        return _table4(data_dir)
    if name == "table6":
        return _table6(data_dir)
    if name in ("boyen-ss", "boyen-mnt"):
        return _boyen(name.split("-")[1].upper(), data_dir)
    if name == "hibe-compare":
        return _verbatim(name, "HIBE comparison", "hibe_compare.csv",
                         ["scheme", "extract_level_k", "encrypt", "decrypt"],
                         data_dir)
    if name == "fs-compare":
        return _verbatim(name, "Forward-secure HIBE comparison",
                         "fs_compare.csv",
                         ["measure", "fs_hibe", "fs_with_our"], data_dir)
    raise KeyError(f"unknown table {name!r}")
