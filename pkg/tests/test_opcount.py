import pytest

from arithmetic import OpLedger
from arithmetic.ledger import composite, tick
from scorecard import expected_row, opcount_verify
from scorecard.opcount import linear_cell
from utils.errors import FormatError


@pytest.mark.parametrize("cell, j, v, expected", [
    (None, 0, 0, 0),
    ("", 0, 0, 0),
    (3, 0, 0, 3),
    (2.0, 0, 0, 2),
    ("3+v-j", 1, 3, 5),
    ("2j", 3, 0, 6),
    ("j+1", 2, 0, 3),
    ("1+v", 0, 4, 5),
])
def test_linear_cells(cell, j, v, expected):
    assert linear_cell(cell, j, v) == expected


def test_unreadable_cell():
    with pytest.raises(FormatError, match="count cell"):
        linear_cell("2k", 1, 1)


def test_expected_row_evaluates_level_terms():
    counts, note = expected_row("our-hibe", "Extract", level=2, depth=3)

    assert counts["ScalarMul"] == 3
    assert counts["Mul"] == 3
    assert counts["Inv"] == 1
    assert "master secret" in note


def test_missing_row():
    with pytest.raises(KeyError, match="our-ibe/Delegate"):
        expected_row("our-ibe", "Delegate")


def _phase(*ticks):
    with OpLedger() as ledger, ledger.phase("Decrypt"):
        for kind, count in ticks:
            tick(kind, count)
    return ledger.phases["Decrypt"]


def test_exact_match():
    diff = _phase(("Pairing", 1), ("ScalarMul", 1))

    report = opcount_verify("bf", "Decrypt", diff)

    assert report.matches
    assert report.describe() == "bf/Decrypt: match"


def test_squarings_count_as_products():
    diff = _phase(("PairingRatio", 1), ("ScalarMul", 1), ("SqK", 1))

    report = opcount_verify("our-hibe", "Decrypt", diff, level=1, depth=1)

    assert report.matches
    assert report.observed["MulK"] == 1


def test_soft_kinds_tolerate_one_off():
    diff = _phase(("PairingRatio", 1), ("ScalarMul", 1), ("MulK", 2))

    report = opcount_verify("our-hibe", "Decrypt", diff, level=1, depth=1)

    assert report.deltas == {"MulK": 1}
    assert report.matches


def test_exact_kinds_do_not():
    diff = _phase(("Pairing", 2), ("MulK", 2), ("InvK", 1))

    report = opcount_verify("bf", "Decrypt", diff)

    assert not report.matches
    assert report.status == "mismatch"
    assert "Pairing +1" in report.describe()


def test_constituents_of_composites_are_not_compared():
    with OpLedger() as ledger, ledger.phase("Decrypt"):
        with composite("Pairing"):
            tick("MulK", 40)
        tick("ScalarMul")

    report = opcount_verify("bf", "Decrypt", ledger.phases["Decrypt"])

    assert report.matches
