"""Polarization kets and fixed operators."""

import numpy as np

from core.qmat.types import PolarizationKet

_S = 1 / np.sqrt(2)

H = PolarizationKet(amp=[1, 0])
V = PolarizationKet(amp=[0, 1])
# diagonal and anti-diagonal
D = PolarizationKet(amp=[_S, _S])
F = PolarizationKet(amp=[_S, -_S])
# left and right circular
L = PolarizationKet(amp=[_S, 1j * _S])
R = PolarizationKet(amp=[_S, -1j * _S])

IDENTITY2 = np.eye(2, dtype=np.complex128)
IDENTITY4 = np.eye(4, dtype=np.complex128)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SPIN_FLIP = np.kron(PAULI_Y, PAULI_Y)

for _arr in (IDENTITY2, IDENTITY4, PAULI_X, PAULI_Y, SPIN_FLIP):
    _arr.setflags(write=False)
