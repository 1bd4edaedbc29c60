"""
Shared pipelines for the test suite; the heavy symbolic objects are computed once per session
"""
from pathlib import Path

import pytest

from src.fixtures import abelian_fixture, einstein_instance, fix_c, five_dim_family
from src.pipeline import GeometryPipeline

GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--regold", action="store_true", default=False,
                     help="Rewrite the golden files from the current output")


@pytest.fixture(scope="session")
def regold(request) -> bool:
    return request.config.getoption("--regold")


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def family():
    """Symbolic five-dimensional family"""
    return GeometryPipeline.from_fixture(five_dim_family())


@pytest.fixture(scope="session")
def fixc():
    """Family at λ1 = μ1 = 1"""
    return GeometryPipeline.from_fixture(fix_c())


@pytest.fixture(scope="session")
def einstein():
    return GeometryPipeline.from_fixture(einstein_instance())


@pytest.fixture(scope="session")
def abelian():
    return GeometryPipeline.from_fixture(abelian_fixture())
