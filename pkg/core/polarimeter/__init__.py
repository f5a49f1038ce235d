"""Detection chain: analyzers, coincidence sampling and witness estimation."""

from core.polarimeter.jones import (
    ANALYZER_ANGLES,
    AnalyzerConfig,
    LocalBasis,
    Port,
    WaveplateKind,
    analyzer_ket,
    analyzer_projector,
    analyzer_settings,
    analyzer_table,
    basis_kets,
    basis_projectors,
    waveplate_jones,
)
from core.polarimeter.sampling import (
    CoincidenceRecord,
    MeasurementSetting,
    SimulationConfig,
    derive_seed,
    outcome_probabilities,
    sample_counts,
    witness_settings,
)
from core.polarimeter.estimator import (
    CHANNEL_COEFFICIENTS,
    WitnessEstimate,
    estimate_from_frequencies,
    estimate_witness,
    exact_frequencies,
    measure_witness,
)

__all__ = [
    "ANALYZER_ANGLES",
    "AnalyzerConfig",
    "CHANNEL_COEFFICIENTS",
    "CoincidenceRecord",
    "LocalBasis",
    "MeasurementSetting",
    "Port",
    "SimulationConfig",
    "WaveplateKind",
    "WitnessEstimate",
    "analyzer_ket",
    "analyzer_projector",
    "analyzer_settings",
    "analyzer_table",
    "basis_kets",
    "basis_projectors",
    "derive_seed",
    "estimate_from_frequencies",
    "estimate_witness",
    "exact_frequencies",
    "measure_witness",
    "outcome_probabilities",
    "sample_counts",
    "witness_settings",
]
