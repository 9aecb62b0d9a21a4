"""
Class defines RankMatrix, a criteria x scheme matrix of integer ranks, and
the aggregation rules that turn rank matrices into classifications: column
sums, dense classes (ties share the better class), property rows derived
from the per-phase complexity ranks, and the merged classifications.
"""
# == Standard Library imports ==
from dataclasses import dataclass
from pathlib import Path

# == Third party imports ==
import pandas as pd

# == Local imports ==
from utils.config import load_settings
from utils.csv_loader import CSVLoader
from utils.errors import MissingCellError, ParameterError

# column order of every classification table
SCHEME_COLUMNS = ["bf", "sk", "bb1", "bb2", "waters", "gentry"]
SCHEME_LABELS = {"bf": "BF", "sk": "SK", "bb1": "BB1", "bb2": "BB2",
                 "waters": "Water", "gentry": "Gentry", "our-ibe": "Our"}

SECURITY_TABLE = "security_ranks.csv"
COMPLEXITY_TABLE = "complexity_ranks.csv"
PINS_TABLE = "published_pins.csv"

# property -> complexity rows it is ranked on
PROPERTY_CRITERIA: dict[str, tuple[str, ...]] = {
    "Multi-recipient": ("Encrypt",),
    "Threshold": ("Extract",),
    "Hierarchical": ("Extract", "Encrypt"),
}


@dataclass
class RankMatrix:
    """
    Dataclass for a rank matrix: one row per criterion, one integer column
    per scheme.
    """
    name: str
    frame: pd.DataFrame

    def __post_init__(self):
        if self.frame.empty:
            raise MissingCellError(f"{self.name}: rank matrix has no rows")
        if self.frame.isna().any().any():
            raise MissingCellError(f"{self.name}: rank matrix has empty cells")
        self.frame = self.frame.astype(int)

    @classmethod
    def from_csv(cls, fpath: str | Path,
                 columns: list[str] | None = None) -> "RankMatrix":
        """
        Method loads a matrix with a ``criterion`` column and one column per
        scheme.
        :param fpath: CSV path.
        :param columns: Scheme columns (default: the six compared schemes).
        :return: RankMatrix named after the file.
        """
        columns = columns or SCHEME_COLUMNS
        df = CSVLoader(fpath).load_table(["criterion", *columns])
        return cls(Path(fpath).stem, df.set_index("criterion"))

    @property
    def schemes(self) -> list[str]:
        return list(self.frame.columns)

    def row(self, criterion: str) -> pd.Series:
        if criterion not in self.frame.index:
            raise MissingCellError(f"{self.name}: no row {criterion!r}")
        return self.frame.loc[criterion]


def dense_classes(sums: pd.Series) -> pd.Series:
    """
    Function ranks ascending sums; tied sums share a class and the next
    class follows without a gap.
    """
    return sums.rank(method="dense").astype(int)


def rank_aggregate(matrix: RankMatrix) -> tuple[pd.Series, pd.Series]:
    """
    Function sums every scheme column and classes the sums.
    :param matrix: Complete rank matrix.
    :return: (sums, classes), both indexed by scheme.
    """
    sums = matrix.frame.sum(axis=0).astype(int)
    return sums, dense_classes(sums)


def property_rank(complexity: RankMatrix,
                  criteria: tuple[str, ...] = tuple(PROPERTY_CRITERIA)
                  ) -> RankMatrix:
    """
    Function derives the property rows from the per-phase complexity ranks:
    a property resting on one phase takes that row, one resting on several
    phases ranks their sum.
    :param complexity: Params/Extract/Encrypt/Decrypt rank matrix.
    :param criteria: Property names, from PROPERTY_CRITERIA.
    :return: RankMatrix with one row per property.
    """
    rows = {}
    for criterion in criteria:
        if criterion not in PROPERTY_CRITERIA:
            raise ParameterError(f"unknown property {criterion!r}; expected "
                                 f"one of {list(PROPERTY_CRITERIA)}")
        phases = PROPERTY_CRITERIA[criterion]
        if len(phases) == 1:
            rows[criterion] = complexity.row(phases[0])
        else:
            combined = sum(complexity.row(phase) for phase in phases)
            rows[criterion] = dense_classes(combined)
    return RankMatrix("properties", pd.DataFrame(rows).T)


def _merge(name: str, first: pd.Series, second: pd.Series,
           labels: tuple[str, str], result: str) -> pd.DataFrame:
    sums = first + second
    frame = pd.DataFrame([first, second, sums, dense_classes(sums)],
                         index=[labels[0], labels[1], "Sum", result])
    frame.columns.name = name
    return frame.astype(int)


def final_classification(security: RankMatrix,
                         complexity: RankMatrix) -> pd.DataFrame:
    """
    Function merges the security and complexity classes into Class1.
    :return: Frame with rows Security class, Complexity class, Sum, Class1.
    """
    _, security_classes = rank_aggregate(security)
    _, complexity_classes = rank_aggregate(complexity)
    return _merge("final", security_classes, complexity_classes,
                  ("Security class", "Complexity class"), "Class1")


def property_classification(complexity: RankMatrix) -> pd.DataFrame:
    """
    Function returns the property rows with their Sum and Class2 rows.
    """
    properties = property_rank(complexity)
    sums, classes = rank_aggregate(properties)
    frame = pd.concat([properties.frame,
                       pd.DataFrame([sums, classes], index=["Sum", "Class2"])])
    frame.columns.name = "properties"
    return frame.astype(int)


def specific_classification(security: RankMatrix,
                            complexity: RankMatrix) -> pd.DataFrame:
    """
    Function merges Class1 and Class2 into the specific classification.
    :return: Frame with rows Class1, Class2, Sum, Specific class.
    """
    class1 = final_classification(security, complexity).loc["Class1"]
    class2 = property_classification(complexity).loc["Class2"]
    return _merge("specific", class1, class2, ("Class1", "Class2"),
                  "Specific class")


def load_rank_matrix(fname: str,
                     data_dir: str | Path | None = None) -> RankMatrix:
    """
    Function loads a rank matrix from the tables directory.
    :param fname: File name, e.g. "security_ranks.csv".
    :param data_dir: Data directory override.
    """
    return RankMatrix.from_csv(load_settings(data_dir=data_dir).tables_dir / fname)


def load_pins(data_dir: str | Path | None = None) -> pd.DataFrame:
    """
    Function loads the published aggregate cells, indexed by (table, row).
    """
    path = load_settings(data_dir=data_dir).tables_dir / PINS_TABLE
    df = CSVLoader(path).load_table(["table", "row", *SCHEME_COLUMNS])
    return df.set_index(["table", "row"])
