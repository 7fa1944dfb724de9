import logging
import sys
from unittest.mock import patch

import pytest
import structlog
from pydantic import ValidationError

from src.config.settings import LogLevel, Settings
from src.log_config.config import configure_logging, json_renderer


class TestSettingsConfig:
    """Test settings configuration."""

    def test_test_environment_settings(self, test_settings, test_settings_dict):
        """Values from .env.test are picked up."""
        assert test_settings.log_level == LogLevel.WARNING
        assert test_settings.log_file_path is None
        assert test_settings.closure_sample_size == test_settings_dict["closure_sample_size"]
        assert test_settings.table_cap == test_settings_dict["table_cap"]

    def test_defaults(self):
        with patch.dict("os.environ", {}, clear=True):
            settings = Settings(_env_file=None)
        assert settings.order_cap == 200000
        assert settings.axiom_check_cap == 4096
        assert settings.table_cap == 2048
        assert settings.closure_seed == 1729
        assert settings.suite_workers == 1

    def test_settings_with_env_vars(self):
        """Test settings loading from environment variables."""
        env_vars = {
            "RINGLAB_ORDER_CAP": "5000",
            "RINGLAB_TABLE_CAP": "64",
            "RINGLAB_LOG_LEVEL": " DEBUG ",
            "RINGLAB_SUITE_WORKERS": "4",
        }
        with patch.dict("os.environ", env_vars, clear=True):
            settings = Settings(_env_file=None)
        assert settings.order_cap == 5000
        assert settings.table_cap == 64
        assert settings.log_level == LogLevel.DEBUG
        assert settings.suite_workers == 4

    @pytest.mark.parametrize("field", ["RINGLAB_ORDER_CAP", "RINGLAB_AXIOM_CHECK_CAP", "RINGLAB_SUITE_WORKERS"])
    def test_non_positive_caps_rejected(self, field):
        with patch.dict("os.environ", {field: "0"}, clear=True):
            with pytest.raises(ValidationError):
                Settings(_env_file=None)

    def test_empty_log_file_path_is_none(self):
        with patch.dict("os.environ", {"RINGLAB_LOG_FILE_PATH": ""}, clear=True):
            settings = Settings(_env_file=None)
        assert settings.log_file_path is None

    def test_unknown_log_level_rejected(self):
        with patch.dict("os.environ", {"RINGLAB_LOG_LEVEL": "verbose"}, clear=True):
            with pytest.raises(ValidationError):
                Settings(_env_file=None)


class TestLoggingConfig:
    """Test the structlog setup."""

    def test_console_handler_writes_to_stderr(self):
        configure_logging("info")
        root = logging.getLogger()
        assert root.level == logging.INFO
        assert len(root.handlers) == 1
        assert root.handlers[0].stream is sys.stderr
        configure_logging("warning")

    def test_file_handler_added_when_path_set(self, tmp_path, restore_settings):
        log_file = tmp_path / "logs" / "ringlab.log"
        restore_settings.log_file_path = str(log_file)
        configure_logging("info")
        structlog.get_logger().info("Built ring", ring="Z_4", order=4)
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert log_file.exists()
        assert "Built ring" in log_file.read_text(encoding="utf-8")
        restore_settings.log_file_path = None
        configure_logging("warning")

    def test_json_renderer(self):
        rendered = json_renderer(None, None, {"event": "Built ring", "order": 16})
        assert '"event": "Built ring"' in rendered
        assert '"order": 16' in rendered
