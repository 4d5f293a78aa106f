"""
Process-level settings using pydantic-settings.
Values come from environment variables and an optional .env file.
"""
from typing import Literal, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LabSettings(BaseSettings):
    """
    Settings that apply to every run, independent of the experiment file.
    """

    # =====================================================================
    # ENVIRONMENT
    # =====================================================================
    ENVIRONMENT: Literal["development", "ci", "production"] = Field(
        default="development",
        description="Current environment"
    )
    APP_NAME: str = "hardylab"
    VERSION: str = "0.1.0"

    # =====================================================================
    # LOGGING
    # =====================================================================
    LOG_LEVEL: str = Field(default="INFO", description="Logging level")
    LOG_FORMAT: Literal["json", "console"] = Field(default="console", description="Log format")
    LOG_FILE: Optional[str] = Field(default=None, description="Optional log file path")

    # =====================================================================
    # RUNS
    # =====================================================================
    REPORT_DIR: str = Field(default="reports", description="Default report directory")
    MAX_WORKERS: int = Field(default=1, ge=1, description="Threads per study (family members)")
    DEFAULT_SEED: int = Field(default=0, ge=0, description="Seed used when the config has none")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )

    @field_validator("LOG_LEVEL")
    @classmethod
    def log_level_known(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v}")
        return level

    @property
    def use_json_logs(self) -> bool:
        return self.LOG_FORMAT == "json"


_settings: Optional[LabSettings] = None


def get_settings() -> LabSettings:
    """Lazily built singleton; tests can call reset_settings() after patching the env."""
    global _settings
    if _settings is None:
        _settings = LabSettings()
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None
