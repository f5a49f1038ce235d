"""Linear algebra on two-photon polarization states.

Everything here is a pure function of its arguments.
"""

from typing import Iterable, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from core.errors import HermiticityError, MixtureError
from core.qmat.basis import IDENTITY2
from core.qmat.types import (
    HERMITIAN_TOL,
    Arm,
    DensityMatrix,
    JonesMatrix,
    Matrix,
    PolarizationKet,
    TwoQubitKet,
    hermiticity_residual,
)

WEIGHT_SUM_TOL = 1e-12
IMAGINARY_TOL = 1e-10


def tensor(a: PolarizationKet, b: PolarizationKet) -> TwoQubitKet:
    """|a>_A (x) |b>_B"""
    return TwoQubitKet(amp=np.kron(a.amp, b.amp))


def projector(k: TwoQubitKet) -> DensityMatrix:
    return DensityMatrix(m=np.outer(k.amp, k.amp.conj()))


def kron_local(rho_a: Matrix, rho_b: Matrix) -> DensityMatrix:
    """Product state from two single-photon density matrices."""
    return DensityMatrix(m=np.kron(np.asarray(rho_a), np.asarray(rho_b)))


def mix(terms: Iterable[Tuple[float, DensityMatrix]]) -> DensityMatrix:
    """Convex combination of states.

    Weights must be nonnegative and sum to one; an all-zero list is rejected
    rather than renormalized.
    """
    terms = list(terms)
    if not terms:
        raise MixtureError("mixture needs at least one term")

    weights = np.array([float(w) for w, _ in terms])
    if np.any(weights < 0):
        raise MixtureError(f"negative mixture weight {weights.min():.12g}")
    total = float(weights.sum())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise MixtureError(f"mixture weights sum to {total:.15g}, expected 1")

    m = sum(float(w) * state.m for w, state in terms)
    return DensityMatrix(m=m)


def local_operator(arm: Arm, u: JonesMatrix) -> Matrix:
    """Lift a single-arm Jones matrix to the pair space."""
    if arm is Arm.A:
        return np.kron(u.u, IDENTITY2)
    return np.kron(IDENTITY2, u.u)


def apply_local(rho: DensityMatrix, arm: Arm, u: JonesMatrix) -> DensityMatrix:
    big = local_operator(arm, u)
    return DensityMatrix(m=big @ rho.m @ big.conj().T)


def dephase_diagonal(rho: DensityMatrix) -> DensityMatrix:
    """Zero every coherence in the |HH>,|HV>,|VH>,|VV> basis."""
    return DensityMatrix(m=np.diag(np.diag(rho.m)))


def partial_transpose(rho: Union[DensityMatrix, Matrix], arm: Arm = Arm.B) -> Matrix:
    """Transpose the indices of one arm; the result need not be positive.

    Accepts a raw 4x4 matrix as well, so the map can be applied twice.
    """
    m = rho.m if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    t = m.reshape(2, 2, 2, 2)  # [a, b, a', b']
    if arm is Arm.B:
        t = t.transpose(0, 3, 2, 1)
    else:
        t = t.transpose(2, 1, 0, 3)
    return t.reshape(4, 4).copy()


def _require_hermitian(m: np.ndarray, subject: str) -> None:
    residual = hermiticity_residual(m)
    if residual > HERMITIAN_TOL:
        raise HermiticityError(subject, residual, HERMITIAN_TOL)


def eigenvalues_hermitian(m: Matrix) -> NDArray[np.float64]:
    """Ascending eigenvalues of a self-adjoint matrix."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    _require_hermitian(m, "eigenvalues_hermitian input")
    return np.linalg.eigvalsh(m)


def expectation(observable: Matrix, rho: DensityMatrix) -> float:
    """Tr[observable . rho]"""
    observable = np.asarray(observable, dtype=np.complex128)
    _require_hermitian(observable, "observable")
    value = np.trace(observable @ rho.m)
    if abs(value.imag) > IMAGINARY_TOL:
        raise HermiticityError("expectation value", abs(value.imag), IMAGINARY_TOL)
    return float(value.real)


def fidelity_pure(rho: DensityMatrix, k: TwoQubitKet) -> float:
    """<k|rho|k>"""
    return float(np.vdot(k.amp, rho.m @ k.amp).real)
