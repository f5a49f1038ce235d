"""Werner states, analytically and through the patchwork source.

The source emits the phase-tunable Bell state (|HH> + e^{i phi}|VV>)/sqrt(2).
The emission ring is split into three sectors:

    A  untouched; a half-wave plate at 45 deg on arm B turns the source
       state into the singlet (step i),
    B  additionally loses all coherences behind a delay plate (step ii),
    C  as B, plus a second half-wave plate at 45 deg on arm A (step iii).

Mixing the sectors with weights (p, (1-p)/2, (1-p)/2) gives werner(p).
"""

from typing import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator, validate_call

from core.errors import PartitionError
from core.polarimeter.jones import WaveplateKind, waveplate_jones
from core.qmat import (
    IDENTITY4,
    Arm,
    DensityMatrix,
    TwoQubitKet,
    apply_local,
    dephase_diagonal,
    fidelity_pure,
    mix,
    projector,
)
from core.qmat.types import Probability

PARTITION_TOL = 1e-12

WernerParam = Probability
BellPhase = Annotated[float, Field(allow_inf_nan=False)]

HWP_45 = waveplate_jones(WaveplateKind.HALF, np.pi / 4)

_S = 1 / np.sqrt(2)


def singlet() -> TwoQubitKet:
    """(|HV> - |VH>)/sqrt(2)"""
    return TwoQubitKet(amp=[0, _S, -_S, 0])


@validate_call
def bell_phi(phase: BellPhase) -> TwoQubitKet:
    """(|HH> + e^{i phase}|VV>)/sqrt(2)"""
    return TwoQubitKet(amp=[_S, 0, 0, _S * np.exp(1j * phase)])


def chaotic() -> DensityMatrix:
    """Maximally mixed pair state."""
    return DensityMatrix(m=IDENTITY4 / 4)


@validate_call
def werner(p: WernerParam) -> DensityMatrix:
    """p |singlet><singlet| + (1 - p)/4 * identity"""
    return mix([(p, projector(singlet())), (1.0 - p, chaotic())])


def singlet_weight(rho: DensityMatrix) -> float:
    """Overlap with the singlet; (1 + 3p)/4 for werner(p)."""
    return fidelity_pure(rho, singlet())


class SectorPartition(BaseModel):
    """Fractions of the emission ring in sectors A (singlet), B and C."""

    model_config = ConfigDict(frozen=True)

    f_singlet: float = Field(ge=0.0, le=1.0, allow_inf_nan=False)
    f_b: float = Field(ge=0.0, le=1.0, allow_inf_nan=False)
    f_c: float = Field(ge=0.0, le=1.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_balance(self) -> "SectorPartition":
        total = self.f_singlet + self.f_b + self.f_c
        if abs(total - 1.0) > PARTITION_TOL:
            raise PartitionError(f"sector fractions sum to {total:.15g}, expected 1")
        if abs(self.f_b - self.f_c) > PARTITION_TOL:
            raise PartitionError(
                f"unbalanced sectors: B={self.f_b:.15g} but C={self.f_c:.15g} (need B = C)"
            )
        return self

    @classmethod
    def for_singlet_weight(cls, p: float) -> "SectorPartition":
        rest = (1.0 - p) / 2
        return cls(f_singlet=p, f_b=rest, f_c=rest)


class PatchworkSectors(BaseModel):
    """Sector states before they are mixed."""

    model_config = ConfigDict(frozen=True)

    a: DensityMatrix
    b: DensityMatrix
    c: DensityMatrix


@validate_call
def patchwork_sectors(source_phase: BellPhase = np.pi) -> PatchworkSectors:
    source = projector(bell_phi(source_phase))
    # step i: half-wave plate in front of detector B
    sector_a = apply_local(source, Arm.B, HWP_45)
    # step ii: the delay plate kills every coherence of the intercepted sectors
    sector_b = dephase_diagonal(sector_a)
    # step iii: half-wave plate on arm A over sector C only
    sector_c = apply_local(dephase_diagonal(sector_a), Arm.A, HWP_45)
    return PatchworkSectors(a=sector_a, b=sector_b, c=sector_c)


def patchwork_pipeline(part: SectorPartition, source_phase: float = np.pi) -> DensityMatrix:
    """State delivered by the patchwork source; werner(part.f_singlet) at phase pi."""
    sectors = patchwork_sectors(source_phase)
    return mix(
        [
            (part.f_singlet, sectors.a),
            (part.f_b, sectors.b),
            (part.f_c, sectors.c),
        ]
    )
