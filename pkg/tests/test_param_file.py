import pytest

from utils import ParamFile
from utils.errors import FormatError


def test_write_then_load_keeps_order_and_values(tmp_path):
    # Arrange
    path = tmp_path / "curve.param"
    values = {"name": "toy", "p": 2 ** 127 - 1, "r": 3}

    # Act
    ParamFile(path).write(values, header="toy curve")
    loaded = ParamFile(path).load()

    # Assert
    assert list(loaded) == ["name", "p", "r"]
    assert loaded["p"] == str(2 ** 127 - 1)
    assert path.read_text().startswith("# toy curve\n")


def test_load_ints_converts_selected_keys(tmp_path):
    path = tmp_path / "curve.param"
    path.write_text("name=toy\np = 11\n\n# comment\nr=3\n")

    assert ParamFile(path).load_ints(["p", "r"]) == {"p": 11, "r": 3}


def test_missing_file_raises_fnf(tmp_path):
    with pytest.raises(FileNotFoundError, match="Parameter file not found"):
        ParamFile(tmp_path / "none.param").load()


def test_wrong_suffix_raises_value_error(tmp_path):
    path = tmp_path / "curve.txt"
    path.write_text("p=11\n")

    with pytest.raises(ValueError, match="Invalid file type"):
        ParamFile(path).load()


def test_line_without_equals_sign(tmp_path):
    path = tmp_path / "curve.param"
    path.write_text("p=11\nnonsense\n")

    with pytest.raises(FormatError, match=":2: expected key=value"):
        ParamFile(path).load()


def test_missing_and_non_integer_keys(tmp_path):
    path = tmp_path / "curve.param"
    path.write_text("p=eleven\n")

    with pytest.raises(FormatError, match="missing keys \\['r'\\]"):
        ParamFile(path).load_ints(["p", "r"])
    with pytest.raises(FormatError, match="eleven"):
        ParamFile(path).load_ints(["p"])
