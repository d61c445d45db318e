# config.py
from __future__ import annotations

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.errors import InvalidParameters


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_prefix="HVHOM_", extra="ignore")

    APP_NAME: str = "hvhom"

    # HVHOM_WINDOW overrides every default window below
    WINDOW: int | None = Field(default=None, ge=0)
    PAIR_WINDOW: int = Field(default=8, ge=0)
    TRIPLE_WINDOW: int = Field(default=6, ge=0)
    SOLVER_WINDOW: int = Field(default=10, ge=1)

    MAX_COUNTEREXAMPLES: int = Field(default=5, ge=0)

    # grid evaluation through a thread pool; results are merged in grid order
    PARALLEL: bool = False
    WORKERS: int = Field(default=4, ge=1)

    LOG_LEVEL: str = "WARNING"

    def default_window(self, kind: Literal["pair", "triple", "solver"] = "pair") -> int:
        if self.WINDOW is not None:
            return self.WINDOW
        if kind == "triple":
            return self.TRIPLE_WINDOW
        if kind == "solver":
            return self.SOLVER_WINDOW
        return self.PAIR_WINDOW

    def resolve_window(self, window: int | None = None,
                       kind: Literal["pair", "triple", "solver"] = "pair") -> int:
        """``window`` itself when given, else the default for ``kind``; never negative."""
        w = self.default_window(kind) if window is None else window
        if w < 0:
            raise InvalidParameters(f"window must be >= 0, got {w}")
        return w


settings = Settings()
