"""Seed-reproducible random states for property checks.

Mixed states are drawn as a Dirichlet(1, ..., 1) spectrum conjugated by a
Haar-random unitary.
"""

import numpy as np

from core.qmat.linalg import kron_local, mix
from core.qmat.types import DensityMatrix, Matrix, PolarizationKet


def random_unitary(rng: np.random.Generator, dim: int = 4) -> Matrix:
    """Haar unitary from the QR decomposition of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def _random_mixed(rng: np.random.Generator, dim: int) -> Matrix:
    spectrum = rng.dirichlet(np.ones(dim))
    u = random_unitary(rng, dim)
    m = (u * spectrum) @ u.conj().T
    return (m + m.conj().T) / 2


def random_polarization_ket(rng: np.random.Generator) -> PolarizationKet:
    """Haar-random pure single-photon state: complex Gaussian vector, normalized."""
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return PolarizationKet(amp=z / np.linalg.norm(z))


def random_qubit_state(rng: np.random.Generator) -> Matrix:
    """Random single-photon density matrix."""
    return _random_mixed(rng, 2)


def random_density_matrix(rng: np.random.Generator) -> DensityMatrix:
    return DensityMatrix(m=_random_mixed(rng, 4))


def random_product_state(rng: np.random.Generator) -> DensityMatrix:
    return kron_local(random_qubit_state(rng), random_qubit_state(rng))


def random_separable_mixture(rng: np.random.Generator, terms: int = 4) -> DensityMatrix:
    weights = rng.dirichlet(np.ones(terms))
    return mix((w, random_product_state(rng)) for w in weights)
