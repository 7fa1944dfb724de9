import os
from pathlib import Path

import pytest

from src.config.settings import settings
from src.constructions.manager import construction_manager
from src.constructions.matrix import MatrixPattern, Slot
from src.log_config.config import configure_logging
from src.suite.catalog import builtin_descriptor
from tests.test_settings import IsolatedTestSettings, create_test_settings_dict


@pytest.fixture(scope="session", autouse=True)
def setup_test_env():
    """Setup test environment with .env.test file."""
    project_root = Path(__file__).parent.parent
    test_env_file = project_root / ".env.test"

    if not test_env_file.exists():
        raise FileNotFoundError(f"Test environment file not found: {test_env_file}")

    original_env_file = os.environ.get("ENV_FILE")
    os.environ["ENV_FILE"] = str(test_env_file)
    configure_logging("warning")

    yield

    if original_env_file:
        os.environ["ENV_FILE"] = original_env_file
    else:
        os.environ.pop("ENV_FILE", None)


@pytest.fixture
def test_settings():
    """Create test settings from .env.test file."""
    return IsolatedTestSettings()


@pytest.fixture
def test_settings_dict():
    """Create test settings dictionary for mocking."""
    return create_test_settings_dict()


@pytest.fixture
def restore_settings():
    """Undo changes a test makes to the settings singleton."""
    saved = settings.model_dump()
    yield settings
    for key, value in saved.items():
        setattr(settings, key, value)


@pytest.fixture(scope="session")
def builtin():
    """Build a catalog ring by slug; rings are shared through the manager cache."""
    def build(slug: str):
        return construction_manager.build(builtin_descriptor(slug))
    return build


@pytest.fixture(scope="session")
def z4(builtin):
    return builtin("z4")


@pytest.fixture(scope="session")
def m2z2(builtin):
    return builtin("m2-z2")


@pytest.fixture(scope="session")
def local16(builtin):
    return builtin("local16")


@pytest.fixture(scope="session")
def k0z2(builtin):
    return builtin("k0-z2")


@pytest.fixture
def open_pattern():
    """2×2 pattern without the a22 slot: E21·E12 = E22 leaves it."""
    slots = (Slot("a11", (0, 0)), Slot("a12", (0, 1)), Slot("a21", (1, 0)))
    return MatrixPattern(2, slots, {slot.position: ((None, k),) for k, slot in enumerate(slots)})
