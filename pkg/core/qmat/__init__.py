"""Exact linear algebra for two-photon polarization states."""

from core.qmat.basis import D, F, H, IDENTITY2, IDENTITY4, L, PAULI_X, PAULI_Y, R, SPIN_FLIP, V
from core.qmat.linalg import (
    apply_local,
    dephase_diagonal,
    eigenvalues_hermitian,
    expectation,
    fidelity_pure,
    kron_local,
    local_operator,
    mix,
    partial_transpose,
    projector,
    tensor,
)
from core.qmat.types import (
    Arm,
    DensityMatrix,
    JonesMatrix,
    Matrix,
    PolarizationKet,
    TwoQubitKet,
)

__all__ = [
    "Arm",
    "D",
    "DensityMatrix",
    "F",
    "H",
    "IDENTITY2",
    "IDENTITY4",
    "JonesMatrix",
    "L",
    "Matrix",
    "PAULI_X",
    "PAULI_Y",
    "PolarizationKet",
    "R",
    "SPIN_FLIP",
    "TwoQubitKet",
    "V",
    "apply_local",
    "dephase_diagonal",
    "eigenvalues_hermitian",
    "expectation",
    "fidelity_pure",
    "kron_local",
    "local_operator",
    "mix",
    "partial_transpose",
    "projector",
    "tensor",
]
