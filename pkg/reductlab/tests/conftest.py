"""
Shared pytest configuration and fixtures for reductlab tests.

This file is automatically loaded by pytest and provides common lattices,
contexts and configuration used across all test modules.
"""

import os
from pathlib import Path
from typing import List

import numpy as np
import pytest

from reductlab.context import LContext, load_context, random_context
from reductlab.infrastructure.monitoring import metrics
from reductlab.lattice import Lattice, boolean_lattice, builtin_chain, parse_builtin

DATA_DIR = Path(__file__).parent.parent / "data"


# ===== Pytest Configuration =====


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line("markers", "integration: marks tests as integration tests")
    config.addinivalue_line("markers", "acceptance: marks end-to-end acceptance criteria")


# ===== Lattice Fixtures =====


@pytest.fixture
def godel3() -> Lattice:
    """Gödel 3-chain 0 < 1/2 < 1"""
    return builtin_chain(3, "godel")


@pytest.fixture
def luk3() -> Lattice:
    """Łukasiewicz 3-chain 0 < 1/2 < 1"""
    return builtin_chain(3, "lukasiewicz")


@pytest.fixture
def boolean() -> Lattice:
    return boolean_lattice()


@pytest.fixture(params=["boolean", "godel(3)", "lukasiewicz(3)", "godel(4)", "lukasiewicz(4)"])
def small_lattice(request) -> Lattice:
    """Every builtin chain with at most four elements"""
    return parse_builtin(request.param)


# ===== Context Fixtures =====


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def counterexample(godel3) -> LContext:
    """φ(x,star) = 0, φ(y,star) = 1/2 over the Gödel 3-chain"""
    return LContext(godel3, ("x", "y"), ("star",), np.array([[0], [1]]))


@pytest.fixture
def closed_set_base() -> LContext:
    return load_context(DATA_DIR / "closed_set_base.yaml")


@pytest.fixture
def duplicate_row() -> LContext:
    return load_context(DATA_DIR / "duplicate_row.yaml")


@pytest.fixture
def crisp(boolean):
    """Build a crisp context from a 0/1 matrix"""

    def _build(matrix: List[List[int]]) -> LContext:
        rows, cols = len(matrix), len(matrix[0]) if matrix else 0
        return LContext(
            boolean,
            tuple(f"x{i}" for i in range(rows)),
            tuple(f"y{j}" for j in range(cols)),
            np.array(matrix, dtype=np.int64).reshape(rows, cols),
        )

    return _build


@pytest.fixture(scope="session")
def seeded_corpus() -> List[LContext]:
    """50 contexts over chains with |L| ≤ 4 and |X|, |Y| ≤ 3"""
    rng = np.random.default_rng(20240611)
    chains = [parse_builtin(d) for d in ("boolean", "godel(3)", "lukasiewicz(3)", "godel(4)", "lukasiewicz(4)")]
    corpus = []
    for n in range(50):
        lattice = chains[n % len(chains)]
        nx, ny = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        corpus.append(random_context(lattice, nx, ny, rng))
    return corpus


# ===== Environment Fixtures =====


@pytest.fixture(autouse=True)
def reset_environment(monkeypatch):
    """Reset environment variables and metrics for each test."""
    for key in list(os.environ.keys()):
        if key.startswith("REDUCTLAB_"):
            monkeypatch.delenv(key, raising=False)

    monkeypatch.setenv("REDUCTLAB_ENV", "test")
    metrics.reset()


# ===== Logging Fixtures =====


@pytest.fixture
def capture_logs(caplog):
    """Capture log output for assertions."""
    caplog.set_level("DEBUG", logger="reductlab")
    return caplog
