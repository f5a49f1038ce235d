"""Correlated measurement settings and coincidence-count sampling.

Counting model: the number of coincidences collected for one setting is
Poisson(rate * duration); they are split over the four outcome channels by
one multinomial draw. No accidentals, dark counts or detector losses.

Random streams are never shared. A setting's stream is seeded from
``numpy.random.SeedSequence([seed, setting.ordinal])``, so a record depends
only on the state, the setting and the configuration.
"""

from typing import Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.polarimeter.jones import LocalBasis, basis_projectors
from core.qmat import DensityMatrix, expectation

_BASIS_ORDER = tuple(LocalBasis)
SEED_LIMIT = 2**64


class MeasurementSetting(BaseModel):
    model_config = ConfigDict(frozen=True)

    basis_a: LocalBasis
    basis_b: LocalBasis

    @classmethod
    def correlated(cls, basis: LocalBasis) -> "MeasurementSetting":
        return cls(basis_a=basis, basis_b=basis)

    @property
    def is_correlated(self) -> bool:
        return self.basis_a is self.basis_b

    @property
    def ordinal(self) -> int:
        """Stable index 0..8 of the basis pair."""
        return 3 * _BASIS_ORDER.index(self.basis_a) + _BASIS_ORDER.index(self.basis_b)


class SimulationConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    rate: float = Field(default=4000.0, gt=0, allow_inf_nan=False)
    duration: float = Field(default=30.0, gt=0, allow_inf_nan=False)
    seed: int = Field(default=0, ge=0, lt=SEED_LIMIT)

    @property
    def mean_total(self) -> float:
        return self.rate * self.duration


class CoincidenceRecord(BaseModel):
    """Counts of one setting, ordered (++, +-, -+, --)."""

    model_config = ConfigDict(frozen=True)

    setting: MeasurementSetting
    counts: Tuple[int, int, int, int]
    total: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_counts(self) -> "CoincidenceRecord":
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative count in {self.counts}")
        if sum(self.counts) != self.total:
            raise ValueError(f"counts {self.counts} do not sum to total {self.total}")
        return self


def witness_settings() -> Tuple[MeasurementSetting, MeasurementSetting, MeasurementSetting]:
    """Linear, diagonal and circular analysis on both arms."""
    return tuple(MeasurementSetting.correlated(basis) for basis in _BASIS_ORDER)


def outcome_probabilities(rho: DensityMatrix, setting: MeasurementSetting) -> NDArray[np.float64]:
    """Joint outcome probabilities (++, +-, -+, --) for one setting."""
    proj_a = basis_projectors(setting.basis_a)
    proj_b = basis_projectors(setting.basis_b)
    probs = np.array([expectation(np.kron(pa, pb), rho) for pa in proj_a for pb in proj_b])
    return np.clip(probs, 0.0, None)


def derive_seed(master: int, *keys: int) -> int:
    """64-bit child seed of ``master`` for the given integer keys."""
    state = np.random.SeedSequence([master, *keys]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def sample_counts(
    rho: DensityMatrix, setting: MeasurementSetting, cfg: SimulationConfig
) -> CoincidenceRecord:
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, setting.ordinal]))
    total = int(rng.poisson(cfg.mean_total))
    probs = outcome_probabilities(rho, setting)
    counts = rng.multinomial(total, probs / probs.sum())
    return CoincidenceRecord(
        setting=setting,
        counts=tuple(int(c) for c in counts),
        total=total,
    )
