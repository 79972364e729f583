"""Schmidt decomposition, reduced density matrices, and the 2x2 closed form.

The Schmidt coefficients are computed as the singular values of the
coefficient matrix; the reduced density matrices ``M M^H`` / ``M^H M`` are
formed only as an independent cross-check of that route (their spectra are
the squared coefficients). The 2x2 closed-form eigenvalues
``(1 +- sqrt(1 - 4 det^2)) / 2`` are authored separately so the two paths
can validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RangeError
from .states import BipartiteState, coefficient_matrix

#: Schmidt coefficients below this count as zero when computing the rank.
DEFAULT_RANK_TOL = 1e-8


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Result of a Schmidt decomposition.

    ``coefficients`` are the singular values of the coefficient matrix in
    descending order (all ``min(dim_a, dim_b)`` of them, including zeros);
    column ``j`` of ``left_vectors`` / ``right_vectors`` holds the paired
    orthonormal vectors, phase-fixed so that the first nonzero entry of each
    left vector is real and nonnegative. ``rank`` counts coefficients above
    the tolerance used at construction.
    """

    coefficients: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray
    rank: int
    tol: float

    def __post_init__(self):
        for arr in (self.coefficients, self.left_vectors, self.right_vectors):
            arr.setflags(write=False)

    def reconstruct(self) -> np.ndarray:
        """Rebuild the amplitude vector as ``sum_j c_j (left_j x right_j)``."""
        terms = np.einsum(
            "j,ij,kj->ik", self.coefficients, self.left_vectors, self.right_vectors
        )
        return terms.reshape(-1)


def reduced_density_a(state: BipartiteState) -> np.ndarray:
    """Reduced density matrix of subsystem A: ``M M^H`` for coefficient matrix M."""
    mat = coefficient_matrix(state)
    return mat @ mat.conj().T


def reduced_density_b(state: BipartiteState) -> np.ndarray:
    """Reduced density matrix of subsystem B: ``M^H M``."""
    mat = coefficient_matrix(state)
    return mat.conj().T @ mat


def schmidt_decompose(state: BipartiteState, tol: float = DEFAULT_RANK_TOL) -> SchmidtDecomposition:
    """Exact Schmidt decomposition via SVD of the coefficient matrix.

    ``tol`` is the rank cutoff applied to the coefficients themselves (not
    their squares) and must lie in (0, 1).
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must lie in (0, 1), got {tol}")
    mat = coefficient_matrix(state)
    u, s, vh = np.linalg.svd(mat, full_matrices=False)

    # Phase convention: first nonzero entry of each left vector made real
    # nonnegative, compensating phase pushed into the right vector.
    left = u.copy()
    right = vh.T.copy()
    for j in range(s.size):
        col = left[:, j]
        nonzero = np.flatnonzero(np.abs(col) > 1e-12)
        if nonzero.size == 0:
            continue
        pivot = col[nonzero[0]]
        phase = pivot / abs(pivot)
        left[:, j] = col * np.conj(phase)
        right[:, j] = right[:, j] * phase

    return SchmidtDecomposition(
        coefficients=s,
        left_vectors=left,
        right_vectors=right,
        rank=int(np.sum(s > tol)),
        tol=float(tol),
    )


def schmidt_rank(state: BipartiteState, tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of Schmidt coefficients above ``tol``; 1 means a product state."""
    return schmidt_decompose(state, tol=tol).rank


def qubit_eigenvalues_closed_form(det_abs: float) -> tuple[float, float]:
    """Closed-form reduced-density eigenvalues of a 2x2 state from ``|det|``.

    Returns ``(mu1, mu2) = ((1 - r) / 2, (1 + r) / 2)`` with
    ``r = sqrt(1 - 4 det_abs^2)``, so that ``mu1 <= mu2`` and
    ``mu1 + mu2 = 1``. Valid for ``0 <= det_abs <= 1/2``; values above
    ``1/2 + 1e-12`` raise RangeError.
    """
    det_abs = float(det_abs)
    if det_abs < 0.0:
        raise RangeError(f"|det| cannot be negative, got {det_abs}")
    if det_abs > 0.5 + 1e-12:
        raise RangeError(f"|det| of a normalized 2x2 state cannot exceed 1/2, got {det_abs}")
    # Clamp guards round-off when det_abs sits within tolerance above 1/2.
    root = np.sqrt(max(1.0 - 4.0 * det_abs * det_abs, 0.0))
    return (1.0 - root) / 2.0, (1.0 + root) / 2.0
