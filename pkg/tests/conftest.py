"""
Shared fixtures for the test suite
"""
import os
import sys
from pathlib import Path

import pytest

# Add the project root to sys.path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)

from src.common.utils.settings import Settings  # noqa: E402


@pytest.fixture
def repo_root() -> Path:
    return Path(project_root)


@pytest.fixture
def golden_dir(repo_root) -> Path:
    return repo_root / "goldens"


@pytest.fixture
def settings(golden_dir) -> Settings:
    return Settings(chunk_size=1 << 14, golden_dir=golden_dir)
