import pandas as pd
import pytest

from utils import CSVLoader
from utils.errors import MissingCellError

def test_load_valid_csv(tmp_path):
    # Arrange
    csv_content = "scheme,Pairing\nbf,1\nsk,2"
    csv_file = tmp_path / "data.csv"
    csv_file.write_text(csv_content)

    loader = CSVLoader(str(csv_file))

    # Act
    df = loader.load()

    # Assert
    assert isinstance(df, pd.DataFrame)
    assert df.shape == (2, 2)
    assert list(df.columns) == ["scheme", "Pairing"]
    assert df.iloc[0]["scheme"] == "bf"

def test_load_missing_file_raises_fnf(tmp_path):
    missing_file = tmp_path / "missing.csv"
    loader = CSVLoader(str(missing_file))

    with pytest.raises(FileNotFoundError, match="CSV file not found"):
        loader.load()

def test_load_invalid_extension_raises_value_error(tmp_path):
    txt_file = tmp_path / "data.txt"
    txt_file.write_text("just some text")

    loader = CSVLoader(str(txt_file))

    with pytest.raises(ValueError, match="Invalid file type"):
        loader.load()
def test_load_skips_comment_lines(tmp_path):
    csv_file = tmp_path / "ranks.csv"
    csv_file.write_text("# published ranks\ncriterion,bf\nModel,6\n")

    df = CSVLoader(csv_file).load()

    assert list(df.columns) == ["criterion", "bf"]
    assert df.iloc[0]["bf"] == 6

class TestLoadTable:
    def test_returns_requested_columns_in_order(self, tmp_path):
        csv_file = tmp_path / "rows.csv"
        csv_file.write_text("scheme,phase,Pairing,extra\nbf,Setup,1,x\n")

        df = CSVLoader(csv_file).load_table(["phase", "scheme"])

        assert list(df.columns) == ["phase", "scheme"]

    def test_missing_column_raises(self, tmp_path):
        csv_file = tmp_path / "rows.csv"
        csv_file.write_text("scheme,phase\nbf,Setup\n")

        with pytest.raises(MissingCellError, match="missing columns \\['note'\\]"):
            CSVLoader(csv_file).load_table(["scheme", "note"])

    def test_blank_required_cell_raises(self, tmp_path):
        csv_file = tmp_path / "rows.csv"
        csv_file.write_text("scheme,phase\nbf,\n")

        with pytest.raises(MissingCellError, match="column 'phase'"):
            CSVLoader(csv_file).load_table(["scheme", "phase"])

    def test_optional_columns_may_be_blank(self, tmp_path):
        csv_file = tmp_path / "rows.csv"
        csv_file.write_text("scheme,Pairing\nbf,\nsk,1\n")

        df = CSVLoader(csv_file).load_table(["scheme", "Pairing"],
                                            optional=("Pairing",))

        assert df["Pairing"].isna().tolist() == [True, False]
