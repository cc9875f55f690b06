# src/planarc5/config.py
from __future__ import annotations

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime knobs. Precedence is CLI flags > PLANARC5_* environment > these defaults."""

    model_config = SettingsConfigDict(env_prefix="PLANARC5_")

    # bitsets are Python ints, so this is a sanity cap rather than a word size
    max_vertices: int = 512
    scan_limit: int = 9
    workers: int = 1
    chunk_size: int = 64
    checkpoint_every: int = 1
    progress: bool = True
    log_level: str = "WARNING"
    # browser origins the API answers; JSON list in PLANARC5_CORS_ORIGINS
    cors_origins: list[str] = []


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
