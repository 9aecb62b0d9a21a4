from pathlib import Path

import pytest

from arithmetic import OpLedger, load_profile
from utils import Drbg

GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", default=False,
                     help="rewrite the files under tests/golden")


@pytest.fixture(scope="session")
def tiny():
    return load_profile("tiny")


@pytest.fixture(scope="session")
def mini():
    return load_profile("mini")


@pytest.fixture(scope="session")
def small():
    return load_profile("small")


@pytest.fixture
def ledger():
    with OpLedger() as active:
        yield active


@pytest.fixture
def drbg():
    return Drbg(7)


@pytest.fixture
def golden(request):
    """
    Fixture compares bytes with tests/golden/<name>. A missing or differing
    file fails the test; run pytest with --update-golden to rewrite it.
    """
    update = request.config.getoption("--update-golden")

    def check(name: str, data: bytes) -> None:
        path = GOLDEN_DIR / name
        if update:
            GOLDEN_DIR.mkdir(exist_ok=True)
            path.write_bytes(data)
            return
        if not path.exists():
            pytest.fail(f"golden file {name} is missing; "
                        f"run pytest --update-golden to write it")
        assert data == path.read_bytes(), f"{name} differs from its golden copy"
    return check
