"""Shared pytest fixtures for all tests."""
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to Python path for imports
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from src.application.factories import fourier_mode, random_bandlimited  # noqa: E402
from src.domain.value_objects import TimeGrid, TorusGrid  # noqa: E402
from src.infrastructure.config import reset_settings  # noqa: E402
from src.infrastructure.elliptic import (  # noqa: E402
    assemble,
    polyharmonic_coefficients,
    random_elliptic_coefficients,
)
from src.infrastructure.funcalc import factorize  # noqa: E402
from src.shared.logging import LoggerFactory  # noqa: E402


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: Unit tests that only touch the in-process numerics"
    )
    config.addinivalue_line(
        "markers", "integration: End-to-end study runs through the CLI entry point"
    )
    config.addinivalue_line(
        "markers", "slow: Refinement runs and large families"
    )


# ============================================================================
# GRIDS
# ============================================================================

@pytest.fixture
def grid_1d():
    """T^1 with N = 16."""
    return TorusGrid(1, 16)


@pytest.fixture
def grid_2d():
    """T^2 with N = 8 (64 sites)."""
    return TorusGrid(2, 8)


@pytest.fixture
def time_grid():
    """Short geometric time grid with the minimum admissible levels."""
    return TimeGrid(1.0 / 16, 0.25, 8)


# ============================================================================
# OPERATORS
# ============================================================================

@pytest.fixture
def laplacian(grid_1d):
    """-Delta on T^1, N = 16."""
    return assemble(polyharmonic_coefficients(1, grid_1d), trials=20, seed=0)


@pytest.fixture
def laplacian_fact(laplacian):
    return factorize(laplacian)


@pytest.fixture
def bilaplacian_fact(grid_1d):
    """Delta^2 on T^1, N = 16."""
    return factorize(assemble(polyharmonic_coefficients(2, grid_1d), trials=20, seed=0))


@pytest.fixture
def random_operator(grid_1d):
    """Complex divergence-form operator with delta = 0.3."""
    return assemble(random_elliptic_coefficients(1, grid_1d, 0.3, seed=7), trials=20, seed=0)


@pytest.fixture
def random_fact(random_operator):
    return factorize(random_operator)


# ============================================================================
# FUNCTIONS
# ============================================================================

@pytest.fixture
def mode_one(grid_1d):
    """e^{2 pi i x}"""
    return fourier_mode(grid_1d, 1)


@pytest.fixture
def smooth_mean_zero(grid_1d):
    """Mean-zero band-limited trigonometric polynomial."""
    return random_bandlimited(grid_1d, 3, seed=1)


@pytest.fixture
def rng():
    return np.random.default_rng(0)


# ============================================================================
# PROCESS STATE
# ============================================================================

@pytest.fixture(autouse=True)
def clean_process_state(monkeypatch):
    """Settings cache and global log context never leak between tests."""
    for name in ("ENVIRONMENT", "LOG_LEVEL", "LOG_FORMAT", "LOG_FILE", "REPORT_DIR", "DEFAULT_SEED", "MAX_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    LoggerFactory.clear_global_context()
    yield
    reset_settings()
    LoggerFactory.clear_global_context()
