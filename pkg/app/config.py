"""Application configuration.

Values come from the environment (prefix ``WITNESS_``) or a local ``.env``
file; command-line flags override them.
"""

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="WITNESS_", extra="ignore")

    # counting statistics: "more than 4000 coincidences per second", ~30 s per setting
    rate: float = Field(default=4000.0, gt=0)
    duration: float = Field(default=30.0, gt=0)
    seed: int = Field(default=0, ge=0, lt=2**64)

    # default sweep grid
    p_min: float = Field(default=0.0, ge=0, le=1)
    p_max: float = Field(default=1.0, ge=0, le=1)
    steps: int = Field(default=11, ge=1)
    workers: int = Field(default=4, ge=1)

    log_level: str = "INFO"

    @model_validator(mode="after")
    def _check_grid(self) -> "Settings":
        if self.p_min > self.p_max:
            raise ValueError(f"p_min ({self.p_min}) must not exceed p_max ({self.p_max})")
        return self


@lru_cache
def get_settings() -> Settings:
    return Settings()
