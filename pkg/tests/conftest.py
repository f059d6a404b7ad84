"""
Shared fixtures
"""

import random
from fractions import Fraction

import pytest

from src.core.config import ToolkitConfig
from src.nonassoc.models import StructureAlgebra

CONFIG_VARIABLES = (
    "LOG_LEVEL",
    "LOG_FILE",
    "OUTPUT_FORMAT",
    "FREE_DIMS_MAX_DEGREE",
    "POLY_DEGREE",
    "POLY_TRIALS",
    "POLY_SEED",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep variables loaded from env files from leaking between tests"""
    for name in CONFIG_VARIABLES:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def config(tmp_path) -> ToolkitConfig:
    return ToolkitConfig(str(tmp_path / "missing.env"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240518)


@pytest.fixture
def rational_vector():
    """Draw a vector of small random rationals"""

    def draw(rng: random.Random, length: int, bound: int = 9):
        return [Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(length)]

    return draw


@pytest.fixture
def write_file(tmp_path):
    """Write text under tmp_path and return the path as a string"""

    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def solvable_bracket() -> StructureAlgebra:
    """[e1, e3] = -e1, [e2, e3] = -e2 - e3"""
    return StructureAlgebra.from_products(
        3,
        {
            (0, 2): (-1, 0, 0),
            (2, 0): (1, 0, 0),
            (1, 2): (0, -1, -1),
            (2, 1): (0, 1, 1),
        },
    )
