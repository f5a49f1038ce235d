"""Waveplates and polarization analyzers in Jones calculus.

Conventions: angles are fast-axis orientations measured from horizontal,
global phases are dropped, and light crosses the quarter-wave plate, then
the half-wave plate, then the polarizing beam splitter (PBS). The PBS
transmits |H> and reflects |V>.
"""

from enum import Enum
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.qmat import D, F, H, L, R, V, JonesMatrix, Matrix, PolarizationKet


class WaveplateKind(str, Enum):
    HALF = "half"
    QUARTER = "quarter"


class Port(str, Enum):
    TRANSMIT = "transmit"
    REFLECT = "reflect"


class LocalBasis(str, Enum):
    """Polarization basis analyzed on one arm; each has two outcomes (+, -)."""

    LINEAR = "linear"  # H / V
    DIAGONAL = "diagonal"  # D / F
    CIRCULAR = "circular"  # L / R


class AnalyzerConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    qwp_angle: float = Field(allow_inf_nan=False)
    hwp_angle: float = Field(allow_inf_nan=False)
    port: Port = Port.TRANSMIT


def waveplate_jones(kind: WaveplateKind, angle: float) -> JonesMatrix:
    """Jones matrix of a waveplate with its fast axis at ``angle`` radians."""
    if not np.isfinite(angle):
        raise ValueError(f"waveplate angle must be finite, got {angle}")
    c, s = np.cos(angle), np.sin(angle)
    if kind is WaveplateKind.HALF:
        c2, s2 = np.cos(2 * angle), np.sin(2 * angle)
        return JonesMatrix(u=[[c2, s2], [s2, -c2]])
    return JonesMatrix(
        u=[
            [c**2 + 1j * s**2, (1 - 1j) * s * c],
            [(1 - 1j) * s * c, s**2 + 1j * c**2],
        ]
    )


_PORT_KETS = {Port.TRANSMIT: H, Port.REFLECT: V}


def analyzer_ket(cfg: AnalyzerConfig) -> Matrix:
    """State selected by QWP -> HWP -> PBS port: Q(q)^dag H(h)^dag |port>."""
    qwp = waveplate_jones(WaveplateKind.QUARTER, cfg.qwp_angle)
    hwp = waveplate_jones(WaveplateKind.HALF, cfg.hwp_angle)
    return qwp.dagger @ hwp.dagger @ _PORT_KETS[cfg.port].amp


def analyzer_projector(cfg: AnalyzerConfig) -> Matrix:
    ket = analyzer_ket(cfg)
    return np.outer(ket, ket.conj())


# (qwp, hwp) per basis; the transmitted port gives the first outcome.
ANALYZER_ANGLES: Dict[LocalBasis, Tuple[float, float]] = {
    LocalBasis.LINEAR: (0.0, 0.0),
    LocalBasis.DIAGONAL: (np.pi / 4, np.pi / 8),
    LocalBasis.CIRCULAR: (0.0, -np.pi / 8),
}

_OUTCOME_LABELS = {
    LocalBasis.LINEAR: ("H", "V"),
    LocalBasis.DIAGONAL: ("D", "F"),
    LocalBasis.CIRCULAR: ("L", "R"),
}

_BASIS_KETS = {
    LocalBasis.LINEAR: (H, V),
    LocalBasis.DIAGONAL: (D, F),
    LocalBasis.CIRCULAR: (L, R),
}


def basis_kets(basis: LocalBasis) -> Tuple[PolarizationKet, PolarizationKet]:
    return _BASIS_KETS[basis]


def analyzer_settings(basis: LocalBasis) -> Tuple[AnalyzerConfig, AnalyzerConfig]:
    """Analyzer configurations for the (+, -) outcomes of a basis."""
    qwp, hwp = ANALYZER_ANGLES[basis]
    return (
        AnalyzerConfig(qwp_angle=qwp, hwp_angle=hwp, port=Port.TRANSMIT),
        AnalyzerConfig(qwp_angle=qwp, hwp_angle=hwp, port=Port.REFLECT),
    )


def analyzer_table() -> Dict[str, AnalyzerConfig]:
    """Documented settings reproducing the six single-photon projectors."""
    table = {}
    for basis in LocalBasis:
        for label, cfg in zip(_OUTCOME_LABELS[basis], analyzer_settings(basis)):
            table[label] = cfg
    return table


@lru_cache(maxsize=None)
def basis_projectors(basis: LocalBasis) -> Tuple[Matrix, Matrix]:
    """(+, -) projectors realized by the analyzer for ``basis``."""
    plus, minus = (analyzer_projector(cfg) for cfg in analyzer_settings(basis))
    plus.setflags(write=False)
    minus.setflags(write=False)
    return plus, minus
