import pandas as pd
import pytest

from scorecard import (RankMatrix, final_classification, load_rank_matrix,
                       property_classification, property_rank, rank_aggregate,
                       specific_classification)
from scorecard.ranking import (COMPLEXITY_TABLE, SECURITY_TABLE,
                               dense_classes)
from utils.errors import MissingCellError, ParameterError


@pytest.fixture(scope="module")
def security():
    return load_rank_matrix(SECURITY_TABLE)


@pytest.fixture(scope="module")
def complexity():
    return load_rank_matrix(COMPLEXITY_TABLE)


def test_dense_classes_share_ties_without_gaps():
    sums = pd.Series({"a": 4, "b": 9, "c": 6, "d": 9, "e": 5})

    assert dense_classes(sums).tolist() == [1, 4, 3, 4, 2]


def test_security_sums_and_classes(security):
    sums, classes = rank_aggregate(security)

    assert sums.tolist() == [11, 16, 14, 20, 10, 13]
    assert classes.tolist() == [2, 5, 4, 6, 1, 3]


def test_complexity_classes(complexity):
    _, classes = rank_aggregate(complexity)

    assert classes.tolist() == [2, 1, 5, 3, 4, 6]


def test_final_classification(security, complexity):
    frame = final_classification(security, complexity)

    assert frame.loc["Sum"].tolist() == [4, 6, 9, 9, 5, 9]
    assert frame.loc["Class1"].tolist() == [1, 3, 4, 4, 2, 4]


def test_property_rows_and_classes(complexity):
    frame = property_classification(complexity)

    assert frame.loc["Hierarchical"].tolist() == [4, 1, 3, 2, 4, 5]
    assert frame.loc["Sum"].tolist() == [12, 3, 9, 7, 12, 14]
    assert frame.loc["Class2"].tolist() == [4, 1, 3, 2, 4, 5]


def test_specific_classification(security, complexity):
    frame = specific_classification(security, complexity)

    assert frame.loc["Specific class"].tolist() == [2, 1, 4, 3, 3, 5]


def test_single_phase_property_copies_the_row(complexity):
    rows = property_rank(complexity, ("Threshold",))

    assert rows.row("Threshold").tolist() == \
        complexity.row("Extract").tolist()


def test_unknown_property(complexity):
    with pytest.raises(ParameterError, match="unknown property"):
        property_rank(complexity, ("Revocable",))


class TestRankMatrixLoading:
    def test_blank_cell_is_refused(self, tmp_path):
        path = tmp_path / "ranks.csv"
        path.write_text("criterion,bf,sk,bb1,bb2,waters,gentry\n"
                        "Model,1,2,,4,5,6\n")

        with pytest.raises(MissingCellError, match="empty cell"):
            RankMatrix.from_csv(path)

    def test_missing_scheme_column_is_refused(self, tmp_path):
        path = tmp_path / "ranks.csv"
        path.write_text("criterion,bf,sk\nModel,1,2\n")

        with pytest.raises(MissingCellError, match="missing columns"):
            RankMatrix.from_csv(path)

    def test_custom_columns_and_comment_lines(self, tmp_path):
        path = tmp_path / "ranks.csv"
        path.write_text("# two schemes only\ncriterion,x,y\nA,1,2\nB,2,1\n")

        matrix = RankMatrix.from_csv(path, columns=["x", "y"])
        sums, classes = rank_aggregate(matrix)

        assert matrix.name == "ranks"
        assert sums.tolist() == [3, 3]
        assert classes.tolist() == [1, 1]

    def test_unknown_row(self, security):
        with pytest.raises(MissingCellError, match="no row"):
            security.row("Speed")
