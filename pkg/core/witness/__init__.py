"""Entanglement detection: witness, partial transpose and concurrence."""

from core.witness.witness import (
    ENTANGLEMENT_TOL,
    EntanglementVerdict,
    PPTCheck,
    ProjectorProbabilities,
    WitnessOperator,
    concurrence,
    is_witnessed_entangled,
    ppt_check,
    witness_analytic_werner,
    witness_decomposition,
    witness_expectation,
    witness_operator,
    witness_projectors,
)

__all__ = [
    "ENTANGLEMENT_TOL",
    "EntanglementVerdict",
    "PPTCheck",
    "ProjectorProbabilities",
    "WitnessOperator",
    "concurrence",
    "is_witnessed_entangled",
    "ppt_check",
    "witness_analytic_werner",
    "witness_decomposition",
    "witness_expectation",
    "witness_operator",
    "witness_projectors",
]
