"""
Class defines CSVLoader, which loads a given CSV at fpath into a dataframe
and checks the columns a scorecard table needs.
"""
# == Standard Library imports ==
from pathlib import Path

# == Third party imports ==
import pandas as pd

# == Local imports ==
from .errors import MissingCellError


class CSVLoader:
    def __init__(self, fpath: str | Path):
        self.filepath = Path(fpath)

    def load(self) -> pd.DataFrame:
        """
        Method validates the given filepath and loads a stored CSV at that
        location as a dataframe.
        :return: Dataframe object of loaded CSV.
        """
        if not self.filepath.exists():
            raise FileNotFoundError(f"CSV file not found: {self.filepath}")
        if not self.filepath.suffix.lower() == ".csv":
            raise ValueError(f"Invalid file type: {self.filepath.suffix}")
        return pd.read_csv(self.filepath, comment="#", skipinitialspace=True)

    def load_table(self, columns: list[str],
                   optional: tuple[str, ...] = ()) -> pd.DataFrame:
        """
        Method loads the CSV and requires every listed column to be present
        and fully populated; ``optional`` columns may hold blanks.
        :param columns: Required column names.
        :param optional: Columns among ``columns`` that may hold blanks.
        :return: Dataframe restricted to ``columns``.
        """
        df = self.load()
        missing = [col for col in columns if col not in df.columns]
        if missing:
            raise MissingCellError(
                f"{self.filepath.name}: missing columns {missing}")
        required = [col for col in columns if col not in optional]
        blanks = df[required].isna()
        if blanks.any().any():
            row, col = blanks.stack()[lambda s: s].index[0]
            raise MissingCellError(
                f"{self.filepath.name}: empty cell in row {row}, column {col!r}")
        return df[list(columns)]
