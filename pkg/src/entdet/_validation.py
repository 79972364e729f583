"""Input validation helpers.

Small, reusable checks in the spirit of ``sklearn.utils.validation``, but
complex-aware (scikit-learn's ``check_array`` rejects complex input).
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateStateError, RangeError, ShapeError

#: Deviation of the input norm from 1 above which a state counts as renormalized.
NORM_TOL = 1e-9


def check_dims(dim_a: int, dim_b: int) -> tuple[int, int]:
    """Validate subsystem dimensions (both must be at least 2)."""
    dim_a, dim_b = int(dim_a), int(dim_b)
    if dim_a < 2 or dim_b < 2:
        raise ShapeError(f"subsystem dimensions must be >= 2, got ({dim_a}, {dim_b})")
    return dim_a, dim_b


def as_amplitude_vector(amplitudes, length: int) -> np.ndarray:
    """Coerce to a complex 1-D array of the given length.

    Raises ShapeError on a length mismatch and DegenerateStateError on a
    zero vector. The returned array is a fresh, writable copy.
    """
    amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if amps.size != length:
        raise ShapeError(f"expected {length} amplitudes, got {amps.size}")
    if np.linalg.norm(amps) == 0.0:
        raise DegenerateStateError("amplitude vector has zero norm")
    return amps.copy()


def check_square(state, dim: int | None = None):
    """Require ``dim_a == dim_b`` (optionally a specific value). Returns the dimension."""
    if state.dim_a != state.dim_b:
        raise ShapeError(f"expected a square state, got dims ({state.dim_a}, {state.dim_b})")
    if dim is not None and state.dim_a != dim:
        raise ShapeError(f"expected a {dim}x{dim} state, got ({state.dim_a}, {state.dim_b})")
    return state.dim_a


def check_bell_coefficients(b, *, real_tol: float = 1e-9) -> np.ndarray:
    """Validate a Bell-basis coefficient vector: length 4, real, unit norm.

    Returns the coefficients as a float array.
    """
    arr = np.asarray(b, dtype=complex).reshape(-1)
    if arr.size != 4:
        raise ShapeError(f"expected 4 Bell coefficients, got {arr.size}")
    if np.max(np.abs(arr.imag)) > real_tol:
        raise RangeError("Bell coefficients must be real")
    vec = arr.real.astype(float)
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > 1e-6:
        raise RangeError(f"Bell coefficients must be normalized, got norm {norm:.6g}")
    return vec


def check_amplitude_rows(X, n_features: int) -> np.ndarray:
    """Validate a 2-D batch of amplitude rows for the estimator API.

    Accepts real or complex input; returns a complex 2-D array with
    ``n_features`` columns.
    """
    arr = np.asarray(X, dtype=complex)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-D array of amplitude rows, got ndim={arr.ndim}")
    if arr.shape[1] != n_features:
        raise ShapeError(
            f"expected rows of length {n_features} (= dim_a * dim_b), got {arr.shape[1]}"
        )
    return arr
