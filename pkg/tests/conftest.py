import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from genutil import random_document  # noqa: E402

DATA_DIR = Path(__file__).parents[1] / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def example_text(data_dir: Path) -> str:
    return (data_dir / "example.json").read_text(encoding="utf-8")


@pytest.fixture
def example_doc(example_text):
    from seqchart.model import parse_document

    return parse_document(example_text)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260823)


__all__ = ["random_document"]


def pytest_runtest_logreport(report):
    # one visible PASS/FAIL line per acceptance criterion
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    status = "PASS" if report.passed else "FAIL"
    name = report.nodeid.split("::")[-1]
    print(f"\n[acceptance] {status} {name}")
