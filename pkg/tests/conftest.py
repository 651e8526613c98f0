from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDENS = REPO_ROOT / "goldens"


@pytest.fixture(scope="session")
def goldens_dir() -> Path:
    return GOLDENS
