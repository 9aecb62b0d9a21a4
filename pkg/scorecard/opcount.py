"""
Module compares the top-level ledger of an executed phase with the
expected op row of that scheme and phase.

Pairings, pairing ratios, scalar multiplications, hash-to-curve calls,
exponentiations and Z_r inversions must match exactly. Z_r and G_T
products and G_T inversions are compared with SOFT_SLACK: additions,
subtractions and hashing are not part of the rows. A product of two
equal values is recorded as a squaring, so top-level Sq and SqK are
folded into Mul and MulK before comparing.
"""
# == Standard Library imports ==
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

# == Third party imports ==
import pandas as pd

# == Local imports ==
from arithmetic import LedgerSnapshot
from utils.config import load_settings
from utils.csv_loader import CSVLoader
from utils.errors import FormatError

logger = logging.getLogger(__name__)

LEDGER_TABLE = "ledger_rows.csv"

EXACT_KINDS = ("Pairing", "PairingRatio", "ScalarMul", "MapToPoint", "Exp",
               "Inv")
SOFT_KINDS = ("Mul", "MulK", "InvK")
SOFT_SLACK = 1
SQUARE_OF = {"Mul": "Sq", "MulK": "SqK"}

_LINEAR_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([jv]?)")


def linear_cell(cell, j: int = 0, v: int = 0) -> int:
    """
    Function evaluates a count cell: blank, an integer, or a sum of terms
    such as "3+v-j" or "2j" over the level j and depth v.
    """
    if cell is None or (isinstance(cell, float) and pd.isna(cell)):
        return 0
    if isinstance(cell, (int, float)):
        return int(cell)
    text = str(cell).replace(" ", "")
    if not text:
        return 0
    total, pos = 0, 0
    while pos < len(text):
        match = _LINEAR_TERM.match(text, pos)
        sign, coeff, var = match.groups()
        if match.end() == pos or not (coeff or var):
            raise FormatError(f"cannot read count cell {cell!r}")
        value = int(coeff) if coeff else 1
        if var:
            value *= j if var == "j" else v
        total += -value if sign == "-" else value
        pos = match.end()
    return total


@dataclass
class OpcountReport:
    """
    Dataclass for the outcome of one comparison; ``deltas`` holds
    observed - expected for every kind that differs.
    """
    scheme: str
    phase: str
    expected: dict[str, int]
    observed: dict[str, int]
    deltas: dict[str, int] = field(default_factory=dict)
    note: str = ""

    @property
    def status(self) -> str:
        return "match" if self.matches else "mismatch"

    @property
    def matches(self) -> bool:
        return all(kind in SOFT_KINDS and abs(delta) <= SOFT_SLACK
                   for kind, delta in self.deltas.items())

    def describe(self) -> str:
        if not self.deltas:
            return f"{self.scheme}/{self.phase}: match"
        detail = ", ".join(f"{k} {d:+d}" for k, d in sorted(self.deltas.items()))
        return f"{self.scheme}/{self.phase}: {self.status} ({detail})"


@lru_cache(maxsize=8)
def _load_rows(tables_dir: str) -> pd.DataFrame:
    df = CSVLoader(Path(tables_dir) / LEDGER_TABLE).load_table(
        ["scheme", "phase", *EXACT_KINDS, *SOFT_KINDS, "note"],
        optional=(*EXACT_KINDS, *SOFT_KINDS, "note"))
    return df.set_index(["scheme", "phase"])


def ledger_rows(data_dir: str | Path | None = None) -> pd.DataFrame:
    return _load_rows(str(load_settings(data_dir=data_dir).tables_dir))


def expected_row(scheme: str, phase: str, level: int = 0, depth: int = 0,
                 data_dir: str | Path | None = None) -> tuple[dict[str, int], str]:
    """
    Function returns the expected counts of one scheme and phase.
    :param level: j, the key or ciphertext level (hierarchical rows).
    :param depth: v, the hierarchy depth (hierarchical rows).
    :return: (counts, note).
    :raises KeyError: No row for (scheme, phase).
    """
    rows = ledger_rows(data_dir)
    if (scheme, phase) not in rows.index:
        raise KeyError(f"no expected op row for {scheme}/{phase}")
    row = rows.loc[(scheme, phase)]
    counts = {kind: linear_cell(row[kind], level, depth)
              for kind in (*EXACT_KINDS, *SOFT_KINDS)}
    note = row["note"] if isinstance(row["note"], str) else ""
    return counts, note


def opcount_verify(scheme: str, phase: str, diff: LedgerSnapshot,
                   level: int = 0, depth: int = 0,
                   data_dir: str | Path | None = None) -> OpcountReport:
    """
    Function compares the top-level counters of a phase diff with the
    expected row. A mismatch is reported, never raised.
    :param scheme: Scheme identifier value.
    :param phase: Setup, Extract, Encrypt, Decrypt (or Delegate).
    :param diff: Ledger diff of the phase, e.g. ledger.phases["Decrypt"].
    :return: OpcountReport.
    """
    expected, note = expected_row(scheme, phase, level, depth, data_dir)
    observed = {kind: diff.top[kind] + diff.top.get(SQUARE_OF.get(kind), 0)
                for kind in expected}
    deltas = {kind: observed[kind] - expected[kind] for kind in expected
              if observed[kind] != expected[kind]}
    report = OpcountReport(scheme, phase, expected, observed, deltas, note)
    if not report.matches:
        logger.debug("op count %s", report.describe())
    return report
