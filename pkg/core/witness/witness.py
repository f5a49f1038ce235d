"""Witness operator for singlet-weighted states, PPT test and concurrence.

The witness

    W = 1/2 (P_HH + P_VV + P_DD + P_FF - P_LR - P_RL)

is nonnegative on every separable state and evaluates to (1 - 3p)/4 on the
Werner state of singlet weight p. Each term is a product of single-photon
projectors, so W is measured with three correlated local settings.
"""

from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping, NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator, validate_call

from core.errors import HermiticityError, TraceError
from core.qmat import (
    D,
    F,
    H,
    L,
    R,
    SPIN_FLIP,
    V,
    Arm,
    DensityMatrix,
    Matrix,
    eigenvalues_hermitian,
    expectation,
    partial_transpose,
    projector,
    tensor,
)
from core.qmat.types import Probability, hermiticity_residual

# below this a negative value counts as entanglement; the p = 1/3 Werner
# state sits exactly on the boundary and must come out separable
ENTANGLEMENT_TOL = 1e-10
OPERATOR_TOL = 1e-12
PROBABILITY_TOL = 1e-12

# coefficient of each product projector in W
WITNESS_COEFFICIENTS: Dict[str, float] = {
    "hh": 0.5,
    "vv": 0.5,
    "dd": 0.5,
    "ff": 0.5,
    "lr": -0.5,
    "rl": -0.5,
}

_PRODUCT_KETS = {
    "hh": (H, H),
    "vv": (V, V),
    "dd": (D, D),
    "ff": (F, F),
    "lr": (L, R),
    "rl": (R, L),
}


class WitnessOperator(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: np.ndarray

    @model_validator(mode="after")
    def _check_operator(self) -> "WitnessOperator":
        residual = hermiticity_residual(self.m)
        if residual > OPERATOR_TOL:
            raise HermiticityError("WitnessOperator", residual, OPERATOR_TOL)
        trace = float(np.trace(self.m).real)
        if abs(trace - 1.0) > OPERATOR_TOL:
            raise TraceError("WitnessOperator", abs(trace - 1.0), OPERATOR_TOL, measured=trace)
        if eigenvalues_hermitian(self.m)[0] >= 0:
            raise ValueError("a witness must have a negative eigenvalue")
        return self


class ProjectorProbabilities(BaseModel):
    """Tr[P_xy rho] for the six product projectors of W."""

    model_config = ConfigDict(frozen=True)

    p_hh: float
    p_vv: float
    p_dd: float
    p_ff: float
    p_lr: float
    p_rl: float

    @model_validator(mode="after")
    def _check_range(self) -> "ProjectorProbabilities":
        for name, value in self.model_dump().items():
            if not -PROBABILITY_TOL <= value <= 1 + PROBABILITY_TOL:
                raise ValueError(f"{name}={value!r} is not a probability")
        return self

    def reconstruct(self) -> float:
        """Witness value assembled from the six probabilities."""
        return 0.5 * (self.p_hh + self.p_vv + self.p_dd + self.p_ff - self.p_lr - self.p_rl)


class PPTCheck(NamedTuple):
    min_eigenvalue: float
    entangled: bool


class EntanglementVerdict(BaseModel):
    """Flags are set only for values below -ENTANGLEMENT_TOL, so boundary states read separable."""

    model_config = ConfigDict(frozen=True)

    witness_value: float
    ppt_min_eigenvalue: float
    witnessed: bool
    ppt_entangled: bool

    @model_validator(mode="after")
    def _check_consistency(self) -> "EntanglementVerdict":
        if self.witnessed != (self.witness_value < -ENTANGLEMENT_TOL):
            raise ValueError("witnessed flag disagrees with witness_value")
        if self.ppt_entangled != (self.ppt_min_eigenvalue < -ENTANGLEMENT_TOL):
            raise ValueError("ppt_entangled flag disagrees with ppt_min_eigenvalue")
        return self


@lru_cache(maxsize=None)
def witness_projectors() -> Mapping[str, Matrix]:
    """The six product projectors, keyed 'hh', 'vv', 'dd', 'ff', 'lr', 'rl' (read-only)."""
    return MappingProxyType(
        {key: projector(tensor(a, b)).m for key, (a, b) in _PRODUCT_KETS.items()}
    )


@lru_cache(maxsize=None)
def witness_operator() -> WitnessOperator:
    projectors = witness_projectors()
    m = sum(WITNESS_COEFFICIENTS[key] * projectors[key] for key in WITNESS_COEFFICIENTS)
    m.setflags(write=False)
    return WitnessOperator(m=m)


def witness_expectation(rho: DensityMatrix) -> float:
    return expectation(witness_operator().m, rho)


@validate_call
def witness_analytic_werner(p: Probability) -> float:
    """Closed-form Tr[W rho_W] = (1 - 3p)/4."""
    return (1 - 3 * p) / 4


def witness_decomposition(rho: DensityMatrix) -> ProjectorProbabilities:
    projectors = witness_projectors()
    return ProjectorProbabilities(
        **{f"p_{key}": expectation(projectors[key], rho) for key in _PRODUCT_KETS}
    )


def ppt_check(rho: DensityMatrix, arm: Arm = Arm.B) -> PPTCheck:
    """Peres-Horodecki test; for two qubits it is exact."""
    lowest = float(eigenvalues_hermitian(partial_transpose(rho, arm))[0])
    return PPTCheck(min_eigenvalue=lowest, entangled=lowest < -ENTANGLEMENT_TOL)


def is_witnessed_entangled(rho: DensityMatrix) -> EntanglementVerdict:
    value = witness_expectation(rho)
    ppt = ppt_check(rho)
    return EntanglementVerdict(
        witness_value=value,
        ppt_min_eigenvalue=ppt.min_eigenvalue,
        witnessed=value < -ENTANGLEMENT_TOL,
        ppt_entangled=ppt.entangled,
    )


def _psd_sqrt(m: Matrix) -> Matrix:
    w, v = np.linalg.eigh(m)
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are the square roots of the eigenvalues of rho (YxY) rho* (YxY),
    obtained here as singular values of sqrt(rho) sqrt(rho_tilde); this avoids
    square roots of rounding noise on rank-deficient states.
    """
    flipped = SPIN_FLIP @ rho.m.conj() @ SPIN_FLIP
    lambdas = np.linalg.svd(_psd_sqrt(rho.m) @ _psd_sqrt(flipped), compute_uv=False)
    lambdas = np.sort(lambdas)[::-1]
    return float(max(0.0, lambdas[0] - lambdas[1:].sum()))
