"""Value types for single- and two-photon polarization states.

Basis order is |H>=0, |V>=1 for one photon and |HH>,|HV>,|VH>,|VV> for a
pair, arm A being the major index (index = 2*a + b). All arrays are stored
read-only, so instances can be shared between threads.
"""

from enum import Enum
from typing import Annotated, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.errors import (
    HermiticityError,
    NormalizationError,
    PositivityError,
    TraceError,
    UnitarityError,
)

NORM_TOL = 1e-12
UNITARY_TOL = 1e-12
HERMITIAN_TOL = 1e-9
TRACE_TOL = 1e-9
POSITIVITY_TOL = 1e-9

Matrix = NDArray[np.complex128]

# real number in [0, 1]; used for singlet weights
Probability = Annotated[float, Field(ge=0.0, le=1.0, allow_inf_nan=False)]


class Arm(str, Enum):
    """Detector site of a photon."""

    A = "A"
    B = "B"


def frozen_array(value, shape: Tuple[int, ...]) -> Matrix:
    """Copy ``value`` into a read-only complex array of the given shape."""
    arr = np.array(value, dtype=np.complex128)
    if arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite amplitude")
    arr.setflags(write=False)
    return arr


def hermiticity_residual(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


class _ArrayModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class PolarizationKet(_ArrayModel):
    """Normalized single-photon polarization state."""

    amp: np.ndarray

    @field_validator("amp", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen_array(value, (2,))

    @model_validator(mode="after")
    def _check_norm(self) -> "PolarizationKet":
        norm = float(np.linalg.norm(self.amp))
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError("PolarizationKet", abs(norm - 1.0), NORM_TOL, measured=norm)
        return self

    def projector(self) -> Matrix:
        return np.outer(self.amp, self.amp.conj())


class TwoQubitKet(_ArrayModel):
    """Normalized pure state of a photon pair."""

    amp: np.ndarray

    @field_validator("amp", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen_array(value, (4,))

    @model_validator(mode="after")
    def _check_norm(self) -> "TwoQubitKet":
        norm = float(np.linalg.norm(self.amp))
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError("TwoQubitKet", abs(norm - 1.0), NORM_TOL, measured=norm)
        return self

    def overlap(self, other: "TwoQubitKet") -> complex:
        """<self|other>"""
        return complex(np.vdot(self.amp, other.amp))


class JonesMatrix(_ArrayModel):
    """Lossless polarization element acting on one photon."""

    u: np.ndarray

    @field_validator("u", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen_array(value, (2, 2))

    @model_validator(mode="after")
    def _check_unitary(self) -> "JonesMatrix":
        residual = float(np.max(np.abs(self.u @ self.u.conj().T - np.eye(2))))
        if residual > UNITARY_TOL:
            raise UnitarityError("JonesMatrix", residual, UNITARY_TOL)
        return self

    @property
    def dagger(self) -> Matrix:
        return self.u.conj().T


class DensityMatrix(_ArrayModel):
    """Hermitian, unit-trace, positive semidefinite 4x4 matrix."""

    m: np.ndarray

    @field_validator("m", mode="before")
    @classmethod
    def _coerce(cls, value):
        return frozen_array(value, (4, 4))

    @model_validator(mode="after")
    def _check_state(self) -> "DensityMatrix":
        residual = hermiticity_residual(self.m)
        if residual > HERMITIAN_TOL:
            raise HermiticityError("DensityMatrix", residual, HERMITIAN_TOL)

        trace = float(np.trace(self.m).real)
        if abs(trace - 1.0) > TRACE_TOL:
            raise TraceError("DensityMatrix", abs(trace - 1.0), TRACE_TOL, measured=trace)

        lowest = float(np.linalg.eigvalsh(self.m)[0])
        if lowest < -POSITIVITY_TOL:
            raise PositivityError("DensityMatrix", -lowest, POSITIVITY_TOL, measured=lowest)
        return self

    def eigenvalues(self) -> NDArray[np.float64]:
        return np.linalg.eigvalsh(self.m)

    def allclose(self, other: "DensityMatrix", atol: float = 1e-12) -> bool:
        """Entrywise comparison; states are compared here, never as kets."""
        return bool(np.allclose(self.m, other.m, rtol=0.0, atol=atol))
