"""
Test-specific settings configuration.
This module provides isolated test settings that don't interfere with a local .env.
"""
from pathlib import Path

from pydantic_settings import SettingsConfigDict

from src.config.settings import Settings


def get_test_env_file():
    """Get the path to the .env.test file."""
    project_root = Path(__file__).parent.parent
    return project_root / ".env.test"


class IsolatedTestSettings(Settings):
    """Test-specific settings that use .env.test file."""

    model_config = SettingsConfigDict(
        env_file=str(get_test_env_file()),
        env_file_encoding='utf-8',
        env_prefix="RINGLAB_",
        env_ignore_empty=False,
        extra="ignore",
    )


def create_test_settings_dict():
    """Create a dictionary of test settings for mocking."""
    return {
        "log_level": "warning",
        "log_file_path": None,
        "order_cap": 200000,
        "axiom_check_cap": 4096,
        "table_cap": 2048,
        "closure_sample_size": 64,
        "closure_seed": 1729,
        "suite_workers": 1,
        "suite_axiom_cap": 256,
    }
