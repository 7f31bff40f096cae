"""
Application configuration using Pydantic Settings.
"""
from typing import Literal

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Suite settings
    SEED: int = 0
    REPORT_PATH: str | None = None  # verify also writes here when set
    REPORT_FORMAT: Literal["text", "json"] = "json"
    PARALLEL_VERIFIERS: bool = True  # Run verifiers in worker threads

    # Lattice settings
    MAX_CLOSURE_ROUNDS: int = 64  # Sweeps before invariant_closure gives up
    COSET_WORD_BOUND: int = 6     # Word length for coset relation search

    # Lock files for report writing
    LOCK_DIR: str = "/tmp/relsim_locks"

    # Server settings (service mode)
    HOST: str = "0.0.0.0"
    PORT: int = 8001
    WORKERS: int = 1

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = False

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "RELSIM_"
        case_sensitive = True


# Create global settings instance
settings = Settings()
