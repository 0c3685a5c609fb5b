"""Validated qutrit/qudit primitives: states, measurements, spectra, fidelity.

Basis convention for the spin-1 ground-state triplet used throughout the
package: index 0 is |0>, index 1 is |-1>, index 2 is |+1>.

Two tolerance regimes coexist.  ATOL guards exact mathematical invariants
(normalization, hermiticity, orthonormality).  DATA_PSD_TOL is the wider
admission window for experimentally reconstructed matrices, which routinely
carry small negative eigenvalues from shot noise; functions that consume a
spectrum clamp such eigenvalues to zero, and anything more negative than
the window is rejected as bad data rather than silently repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Exact-invariant tolerance.
ATOL = 1e-9
# Experimental negativity admission window (see module docstring).
DATA_PSD_TOL = 5e-2
# Eigenvalues of nominally PSD products below this floor are eigensolver
# noise; zero them before square roots, which would amplify 1e-16 noise
# into 1e-8 fidelity errors.
NOISE_FLOOR = 1e-14


class ValidationError(ValueError):
    """An input violates a structural contract (shape, norm, hermiticity)."""


class DataQualityError(ValidationError):
    """Input is structurally valid but physically inconsistent beyond tolerance."""


class CapacityError(ValidationError):
    """Requested computation exceeds a hard combinatorial limit."""


def as_complex_array(value, *, name: str = "array") -> np.ndarray:
    """Coerce to a finite complex128 ndarray, rejecting NaN/Inf."""
    arr = np.asarray(value, dtype=complex)
    # isfinite is not defined for complex; check the parts (works for any
    # memory layout, unlike a float view).
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValidationError(f"{name} contains non-finite entries")
    return arr


def as_state_vector(value, *, name: str = "state") -> np.ndarray:
    """Validate a normalized ket, returned as a fresh complex128 array."""
    ket = as_complex_array(value, name=name)
    if ket.ndim != 1 or ket.size < 2:
        raise ValidationError(f"{name} must be a 1-d vector of dimension >= 2")
    norm = np.linalg.norm(ket)
    if abs(norm - 1.0) > ATOL:
        raise ValidationError(f"{name} is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
    return ket.copy()


def _check_hermitian(matrix: np.ndarray, *, name: str) -> np.ndarray:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"{name} must be a square matrix")
    if not np.allclose(matrix, matrix.conj().T, rtol=0.0, atol=ATOL):
        dev = float(np.max(np.abs(matrix - matrix.conj().T)))
        raise ValidationError(f"{name} is not Hermitian within tolerance (dev {dev:.3e})")
    # Symmetrize away representation-level asymmetry below tolerance so the
    # eigensolver sees an exactly Hermitian operator.
    return 0.5 * (matrix + matrix.conj().T)


def as_density_matrix(value, *, psd_tol: float = DATA_PSD_TOL, name: str = "rho") -> np.ndarray:
    """Validate a density matrix given as a DensityOperator or raw array.

    Raw arrays must be Hermitian with unit trace (both within ATOL) and
    have spectrum bounded below by ``-psd_tol``.  The matrix itself is
    returned unrepaired; negative eigenvalues inside the window are the
    caller's business (typically clamped where a spectrum is consumed).
    """
    if isinstance(value, DensityOperator):
        return value.matrix
    m = _check_hermitian(as_complex_array(value, name=name), name=name)
    tr = m.trace()
    if abs(tr - 1.0) > ATOL:
        raise ValidationError(f"{name} trace deviates from 1 by {abs(tr - 1.0):.3e}")
    lo = float(np.linalg.eigvalsh(m).min())
    if lo < -psd_tol:
        raise DataQualityError(
            f"{name} has eigenvalue {lo:.4e} below the admission window -{psd_tol:g}"
        )
    return m


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A strictly physical density matrix (PSD within ATOL, unit trace).

    Experimental matrices with larger negativity do not construct; pass
    them as raw arrays to functions that accept the wider data window.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = _check_hermitian(as_complex_array(self.matrix, name="matrix"), name="matrix")
        tr = m.trace()
        if abs(tr - 1.0) > ATOL:
            raise ValidationError(f"density matrix trace deviates from 1 by {abs(tr - 1.0):.3e}")
        lo = float(np.linalg.eigvalsh(m).min())
        if lo < -ATOL:
            raise ValidationError(f"density matrix eigenvalue {lo:.4e} below -{ATOL:g}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_ket(cls, ket) -> "DensityOperator":
        psi = as_state_vector(ket)
        return cls(np.outer(psi, psi.conj()))

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


@dataclass(frozen=True, eq=False)
class ProjectiveMeasurement:
    """A rank-1 projective measurement: d orthonormal basis kets (rows).

    ``basis[i]`` is the ket whose projector gives outcome i.
    """

    basis: np.ndarray
    label: str = "M"

    def __post_init__(self):
        b = as_complex_array(self.basis, name=f"{self.label} basis")
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValidationError(f"{self.label} basis must be d kets of dimension d")
        gram = b.conj() @ b.T
        if not np.allclose(gram, np.eye(b.shape[0]), rtol=0.0, atol=ATOL):
            dev = float(np.max(np.abs(gram - np.eye(b.shape[0]))))
            raise ValidationError(f"{self.label} basis is not orthonormal (dev {dev:.3e})")
        b = b.copy()
        b.flags.writeable = False
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @classmethod
    def from_vectors(cls, vectors, label: str = "M") -> "ProjectiveMeasurement":
        return cls(np.array([as_state_vector(v, name=f"{label}[{i}]") for i, v in enumerate(vectors)]), label)


def hermitian_eigen(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix with a deterministic gauge.

    Eigenvalues come back descending (ties keep the solver's order) and
    each eigenvector's phase is fixed so its largest-magnitude component
    is real and positive.  Vectors are the columns of the second return.
    """
    m = _check_hermitian(as_complex_array(matrix, name="matrix"), name="matrix")
    vals, vecs = np.linalg.eigh(m)
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for j in range(vecs.shape[1]):
        k = int(np.argmax(np.abs(vecs[:, j])))
        pivot = vecs[k, j]
        vecs[:, j] *= np.conj(pivot) / abs(pivot)
    return vals, vecs


def born_probabilities(measurement: ProjectiveMeasurement, rho) -> np.ndarray:
    """Outcome distribution p_i = <u_i| rho |u_i> of a projective measurement."""
    r = as_density_matrix(rho, psd_tol=ATOL)
    if measurement.dim != r.shape[0]:
        raise ValidationError(
            f"dimension mismatch: measurement dim {measurement.dim}, state dim {r.shape[0]}"
        )
    amps = np.einsum("id,de,ie->i", measurement.basis.conj(), r, measurement.basis)
    if np.max(np.abs(amps.imag)) > ATOL:
        raise ValidationError("Born probabilities have imaginary part beyond tolerance")
    p = amps.real
    if p.min() < -ATOL or abs(p.sum() - 1.0) > ATOL:
        raise ValidationError("Born probabilities violate distribution invariants")
    return p


def overlap_c(m1: ProjectiveMeasurement, m2: ProjectiveMeasurement) -> float:
    """Largest squared overlap c = max_{ij} |<u_i|v_j>|^2 between two bases."""
    if m1.dim != m2.dim:
        raise ValidationError("overlap requires measurements of equal dimension")
    c = float(np.max(np.abs(m1.basis.conj() @ m2.basis.T) ** 2))
    # Cauchy-Schwarz caps c at 1; shave representation noise.
    return min(c, 1.0)


def largest_singular_value_sq(vectors) -> float:
    """Largest squared singular value of a stack of kets (rows).

    Computed as the top eigenvalue of the Gram matrix, which is cheaper
    than an SVD for short wide stacks and exact for our subset sizes.
    """
    rows = as_complex_array(vectors, name="vectors")
    if rows.ndim != 2 or rows.shape[0] == 0:
        raise ValidationError("expected a non-empty 2-d stack of kets")
    gram = rows.conj() @ rows.T
    return float(np.linalg.eigvalsh(gram)[-1])


def matrix_sqrt_psd(matrix) -> np.ndarray:
    """Principal square root of a PSD matrix.

    Eigenvalues in [-ATOL, 0) are clamped to zero; anything lower raises,
    since a square root of a genuinely indefinite operator is undefined.
    """
    m = _check_hermitian(as_complex_array(matrix, name="matrix"), name="matrix")
    vals, vecs = np.linalg.eigh(m)
    if vals.min() < -ATOL:
        raise ValidationError(f"matrix is not PSD within tolerance (min eigenvalue {vals.min():.3e})")
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def ray_fidelity(psi, phi) -> float:
    """Squared overlap of two kets as rays (global phase ignored)."""
    a = as_state_vector(psi, name="psi")
    b = as_state_vector(phi, name="phi")
    if a.size != b.size:
        raise ValidationError("ray fidelity requires equal-dimension kets")
    return float(min(abs(np.vdot(a, b)) ** 2, 1.0))
