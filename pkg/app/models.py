"""Pydantic models for the command-line layer."""

from typing import Annotated, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.config import Settings
from core.polarimeter import SimulationConfig
from core.qmat.types import Probability

ANALYTIC_TOL = 1e-12

FiniteFloat = Annotated[float, Field(allow_inf_nan=False)]


def make_grid(p_min: float, p_max: float, steps: int) -> List[float]:
    """Evenly spaced singlet weights, endpoints included."""
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps}")
    if p_min > p_max:
        raise ValueError(f"p_min ({p_min}) must not exceed p_max ({p_max})")
    if steps == 1:
        return [float(p_min)]
    return [float(p) for p in np.linspace(p_min, p_max, steps)]


def simulation_from_settings(settings: Settings, **overrides: Optional[float]) -> SimulationConfig:
    """SimulationConfig from Settings; ``None`` overrides are ignored."""
    values = {"rate": settings.rate, "duration": settings.duration, "seed": settings.seed}
    values.update({key: value for key, value in overrides.items() if value is not None})
    return SimulationConfig(**values)


class SweepConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    p_values: List[Probability] = Field(
        default_factory=lambda: make_grid(0.0, 1.0, 11), min_length=1
    )
    simulation: SimulationConfig = Field(default_factory=SimulationConfig)
    analytic_only: bool = False
    source: Literal["analytic", "patchwork"] = "analytic"
    workers: int = Field(default=4, ge=1)


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: float
    w_est: float
    w_err: float = Field(ge=0.0)
    w_analytic: float
    ppt_min_eig: float
    entangled_ppt: bool

    @model_validator(mode="after")
    def _check_analytic(self) -> "SweepRow":
        expected = (1 - 3 * self.p) / 4
        if abs(self.w_analytic - expected) >= ANALYTIC_TOL:
            raise ValueError(f"w_analytic {self.w_analytic!r} is not (1-3p)/4 = {expected!r}")
        return self


class StateDocument(BaseModel):
    """On-disk form of a density matrix: real and imaginary parts, row-major."""

    dim: Literal[4]
    re: List[List[FiniteFloat]]
    im: List[List[FiniteFloat]]

    @field_validator("re", "im")
    @classmethod
    def _check_shape(cls, rows: List[List[float]]) -> List[List[float]]:
        if len(rows) != 4 or any(len(row) != 4 for row in rows):
            raise ValueError("expected a 4x4 array")
        return rows
