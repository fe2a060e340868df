from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def bands_dir() -> Path:
    return REPO_ROOT / "data" / "bands"


@pytest.fixture(scope="session")
def dy162_path(bands_dir) -> Path:
    return bands_dir / "dy162.band"
