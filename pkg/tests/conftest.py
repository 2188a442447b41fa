import os
from pathlib import Path

import pytest

from anagram_group import load_dictionary, run

SOWPODS_CANDIDATES = [
    os.environ.get("SOWPODS_PATH"),
    "data/sowpods.txt",
    "sowpods.txt",
]


def _sowpods_path():
    for c in SOWPODS_CANDIDATES:
        if c and Path(c).is_file():
            return Path(c)
    return None


@pytest.fixture(scope="session")
def sowpods():
    path = _sowpods_path()
    if path is None:
        pytest.skip("SOWPODS word list not found; set SOWPODS_PATH to run these checks")
    return load_dictionary(path)


@pytest.fixture(scope="session")
def sowpods_result(sowpods):
    return run(sowpods)
