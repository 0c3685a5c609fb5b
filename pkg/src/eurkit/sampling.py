"""Random states and bases for property tests and dominance scans."""

from __future__ import annotations

import numpy as np

from .linalg import DensityOperator, ProjectiveMeasurement, ValidationError


def _ginibre(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_pure_ket(rng: np.random.Generator, dim: int = 3) -> np.ndarray:
    """Haar-random normalized ket."""
    z = _ginibre(rng, dim)
    return z / np.linalg.norm(z)


def random_density(rng: np.random.Generator, dim: int = 3, *, pure: bool = False) -> DensityOperator:
    """Random density operator: Haar-random eigenbasis, flat-Dirichlet spectrum."""
    if pure:
        return DensityOperator.from_ket(random_pure_ket(rng, dim))
    basis = random_basis(rng, dim).basis
    spectrum = rng.dirichlet(np.ones(dim))
    return DensityOperator((basis.T * spectrum) @ basis.conj())


def random_basis(rng: np.random.Generator, dim: int = 3, label: str = "R") -> ProjectiveMeasurement:
    """Haar-random orthonormal basis as a projective measurement."""
    if dim < 2:
        raise ValidationError("random basis needs dim >= 2")
    q, r = np.linalg.qr(_ginibre(rng, (dim, dim)))
    d = np.diag(r)
    q = q * (d / np.abs(d))
    return ProjectiveMeasurement(q.T.conj(), label)
