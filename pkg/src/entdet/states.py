"""Bipartite pure states and their coefficient-matrix view.

A state over subsystems of dimension ``dim_a`` and ``dim_b`` is stored as a
normalized complex amplitude vector with row-major A-then-B ordering: entry
``i * dim_b + mu`` is the amplitude of the product ket with A-label ``i`` and
B-label ``mu``. Reshaping that vector to ``(dim_a, dim_b)`` yields the
coefficient matrix; every determinant- and trace-based rule in this package
operates on that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._validation import NORM_TOL, as_amplitude_vector, check_dims
from .errors import DegenerateStateError, ShapeError


@dataclass(frozen=True)
class BipartiteState:
    """Normalized pure state of an A x B system.

    Attributes
    ----------
    dim_a, dim_b : int
        Subsystem dimensions, each >= 2.
    amplitudes : numpy.ndarray
        Read-only complex vector of length ``dim_a * dim_b`` with unit norm.
    was_renormalized : bool
        True when the input norm deviated from 1 by more than ``NORM_TOL``.
    """

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray = field(repr=False)
    was_renormalized: bool = False

    def __post_init__(self):
        self.amplitudes.setflags(write=False)

    @property
    def size(self) -> int:
        return self.dim_a * self.dim_b

    def coefficient_matrix(self) -> np.ndarray:
        """Amplitudes reshaped to ``(dim_a, dim_b)``; row i = A-label, column mu = B-label."""
        return self.amplitudes.reshape(self.dim_a, self.dim_b)


def make_state(dim_a: int, dim_b: int, amplitudes) -> BipartiteState:
    """Build a normalized state from raw amplitudes.

    Vectors whose norm already sits within ``NORM_TOL`` of 1 are kept
    bit-identical (so round trips and exact surd literals survive); anything
    else is divided by its norm and flagged via ``was_renormalized``. Raises
    ShapeError on a length mismatch, DegenerateStateError on a zero vector.
    """
    dim_a, dim_b = check_dims(dim_a, dim_b)
    amps = as_amplitude_vector(amplitudes, dim_a * dim_b)
    norm = np.linalg.norm(amps)
    renormalized = bool(abs(norm - 1.0) > NORM_TOL)
    return BipartiteState(
        dim_a=dim_a,
        dim_b=dim_b,
        amplitudes=amps / norm if renormalized else amps,
        was_renormalized=renormalized,
    )


def basis_state(dim_a: int, dim_b: int, i: int, mu: int) -> BipartiteState:
    """Product basis ket with A-label ``i`` and B-label ``mu``."""
    dim_a, dim_b = check_dims(dim_a, dim_b)
    if not (0 <= i < dim_a and 0 <= mu < dim_b):
        raise IndexError(f"basis labels ({i}, {mu}) out of range for dims ({dim_a}, {dim_b})")
    amps = np.zeros(dim_a * dim_b, dtype=complex)
    amps[i * dim_b + mu] = 1.0
    return BipartiteState(dim_a=dim_a, dim_b=dim_b, amplitudes=amps)


def coefficient_matrix(state: BipartiteState) -> np.ndarray:
    """Coefficient matrix of a state: entry ``(i, mu)`` is the amplitude of ``|i mu>``.

    Pure reshape, no arithmetic; Frobenius norm equals the amplitude norm.
    """
    return state.coefficient_matrix()


def state_from_matrix(matrix) -> BipartiteState:
    """Inverse of :func:`coefficient_matrix`: rebuild a state from a 2-D amplitude matrix."""
    mat = np.asarray(matrix, dtype=complex)
    if mat.ndim != 2:
        raise ShapeError(f"expected a 2-D coefficient matrix, got ndim={mat.ndim}")
    dim_a, dim_b = check_dims(*mat.shape)
    if np.linalg.norm(mat) == 0.0:
        raise DegenerateStateError("coefficient matrix has zero norm")
    return make_state(dim_a, dim_b, mat.reshape(-1))
