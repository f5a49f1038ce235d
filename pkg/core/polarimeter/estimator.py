"""Witness estimate from the three correlated coincidence records.

Each setting contributes sum_i c_i * f_i, where f_i are the observed channel
frequencies and c_i in {+1/2, -1/2, 0} the weight of that channel in W. The
variance uses the plug-in multinomial covariance within each setting; the
settings are independent.
"""

from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.errors import RecordError
from core.polarimeter.jones import LocalBasis
from core.polarimeter.sampling import (
    CoincidenceRecord,
    SimulationConfig,
    outcome_probabilities,
    sample_counts,
    witness_settings,
)
from core.qmat import DensityMatrix
from core.witness import ProjectorProbabilities

# channel order (++, +-, -+, --)
CHANNEL_COEFFICIENTS: Dict[LocalBasis, np.ndarray] = {
    LocalBasis.LINEAR: np.array([0.5, 0.0, 0.0, 0.5]),  # HH, VV
    LocalBasis.DIAGONAL: np.array([0.5, 0.0, 0.0, 0.5]),  # DD, FF
    LocalBasis.CIRCULAR: np.array([0.0, -0.5, -0.5, 0.0]),  # LR, RL
}


class WitnessEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    std_error: float = Field(ge=0.0)
    probabilities: ProjectorProbabilities

    @model_validator(mode="after")
    def _check_value(self) -> "WitnessEstimate":
        if self.value != self.probabilities.reconstruct():
            raise ValueError("value does not match the stored probabilities")
        return self


def estimate_from_frequencies(
    frequencies: Mapping[LocalBasis, np.ndarray], totals: Mapping[LocalBasis, float]
) -> WitnessEstimate:
    """Estimate from per-setting channel frequencies and sample sizes.

    Passing exact outcome probabilities gives the infinite-statistics value
    (with any positive totals).
    """
    lin = frequencies[LocalBasis.LINEAR]
    diag = frequencies[LocalBasis.DIAGONAL]
    circ = frequencies[LocalBasis.CIRCULAR]
    probabilities = ProjectorProbabilities(
        p_hh=float(lin[0]),
        p_vv=float(lin[3]),
        p_dd=float(diag[0]),
        p_ff=float(diag[3]),
        p_lr=float(circ[1]),
        p_rl=float(circ[2]),
    )

    variance = 0.0
    for basis, coeffs in CHANNEL_COEFFICIENTS.items():
        f = np.asarray(frequencies[basis], dtype=float)
        term = float(coeffs**2 @ f - (coeffs @ f) ** 2)
        variance += max(term, 0.0) / totals[basis]

    return WitnessEstimate(
        value=probabilities.reconstruct(),
        std_error=float(np.sqrt(variance)),
        probabilities=probabilities,
    )


def _index_records(records: Sequence[CoincidenceRecord]) -> Dict[LocalBasis, CoincidenceRecord]:
    by_basis: Dict[LocalBasis, CoincidenceRecord] = {}
    for record in records:
        setting = record.setting
        if not setting.is_correlated:
            raise RecordError(
                f"setting {setting.basis_a.value}/{setting.basis_b.value} is not correlated"
            )
        if setting.basis_a in by_basis:
            raise RecordError(f"duplicate record for the {setting.basis_a.value} setting")
        by_basis[setting.basis_a] = record

    missing = [basis.value for basis in LocalBasis if basis not in by_basis]
    if missing:
        raise RecordError(f"missing records for settings: {', '.join(missing)}")
    return by_basis


def estimate_witness(records: Sequence[CoincidenceRecord]) -> WitnessEstimate:
    by_basis = _index_records(records)
    for basis, record in by_basis.items():
        if record.total <= 0:
            raise RecordError(f"{basis.value} record has zero total counts")

    frequencies = {
        basis: np.array(record.counts, dtype=float) / record.total
        for basis, record in by_basis.items()
    }
    totals = {basis: float(record.total) for basis, record in by_basis.items()}
    return estimate_from_frequencies(frequencies, totals)


def measure_witness(
    rho: DensityMatrix, cfg: SimulationConfig
) -> Tuple[List[CoincidenceRecord], WitnessEstimate]:
    """Run the three-setting protocol on ``rho`` and estimate the witness."""
    records = [sample_counts(rho, setting, cfg) for setting in witness_settings()]
    return records, estimate_witness(records)


def exact_frequencies(rho: DensityMatrix) -> Dict[LocalBasis, np.ndarray]:
    """Outcome probabilities of the three witness settings."""
    return {s.basis_a: outcome_probabilities(rho, s) for s in witness_settings()}
