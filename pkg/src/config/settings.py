from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional
from pydantic import field_validator
from enum import Enum


class LogLevel(str, Enum):
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


class Settings(BaseSettings):
    # Logging Configuration
    log_level: LogLevel = LogLevel.WARNING
    log_file_path: Optional[str] = None

    # Search caps
    order_cap: int = 200000
    axiom_check_cap: int = 4096
    table_cap: int = 2048

    # Construction-time closure spot checks
    closure_sample_size: int = 256
    closure_seed: int = 1729

    # Theorem suite
    suite_workers: int = 1
    suite_axiom_cap: int = 256

    @field_validator('log_level', mode='before')
    def normalise_log_level(cls, v):
        if isinstance(v, str):
            return v.strip().lower()
        return v

    @field_validator('log_file_path', mode='before')
    def parse_log_file_path(cls, v):
        if v == '' or v is None:
            return None
        return str(v)

    @field_validator(
        'order_cap', 'axiom_check_cap', 'table_cap',
        'closure_sample_size', 'suite_workers', 'suite_axiom_cap',
    )
    def check_positive(cls, v):
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="RINGLAB_",
        extra="ignore",
    )


settings = Settings()
