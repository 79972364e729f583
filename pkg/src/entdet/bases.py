"""Entangled bases and the generator matrices their coefficient matrices match.

The four Bell states and the nine-member entangled qutrit basis are built
from exact surd literals (1/sqrt(2), 1/sqrt(3), 1/sqrt(6), 2/sqrt(6)); their
coefficient matrices reproduce, up to a known scalar, the identity, the Pauli
matrices, and the Gell-Mann matrices respectively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .states import BipartiteState, coefficient_matrix, make_state

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
SQRT6 = np.sqrt(6.0)

# Bell states |phi_k>, amplitudes over (|00>, |01>, |10>, |11>).
_BELL_AMPLITUDES = (
    (1 / SQRT2, 0, 0, 1 / SQRT2),
    (0, 1 / SQRT2, 1 / SQRT2, 0),
    (0, 1 / SQRT2, -1 / SQRT2, 0),
    (1 / SQRT2, 0, 0, -1 / SQRT2),
)

# Entangled qutrit basis |beta_k> as (index, value) sparse entries over the
# nine product kets |00>..|22| in row-major order.
_QUTRIT_AMPLITUDES = (
    ((0, 1 / SQRT3), (4, 1 / SQRT3), (8, 1 / SQRT3)),
    ((1, 1 / SQRT2), (3, 1 / SQRT2)),
    ((1, 1 / SQRT2), (3, -1 / SQRT2)),
    ((0, 1 / SQRT2), (4, -1 / SQRT2)),
    ((2, 1 / SQRT2), (6, 1 / SQRT2)),
    ((2, 1 / SQRT2), (6, -1 / SQRT2)),
    ((5, 1 / SQRT2), (7, 1 / SQRT2)),
    ((5, 1 / SQRT2), (7, -1 / SQRT2)),
    ((0, 1 / SQRT6), (4, 1 / SQRT6), (8, -2 / SQRT6)),
)


def bell_state(k: int) -> BipartiteState:
    """Bell state |phi_k>, k in 0..3."""
    if not 0 <= k <= 3:
        raise IndexError(f"Bell index must be in 0..3, got {k}")
    # Construct directly so the surd literals stay bit-exact (no renormalization).
    return BipartiteState(2, 2, np.array(_BELL_AMPLITUDES[k], dtype=complex))


def qutrit_basis_state(k: int) -> BipartiteState:
    """Entangled qutrit basis state |beta_k>, k in 0..8."""
    if not 0 <= k <= 8:
        raise IndexError(f"qutrit basis index must be in 0..8, got {k}")
    amps = np.zeros(9, dtype=complex)
    for idx, val in _QUTRIT_AMPLITUDES[k]:
        amps[idx] = val
    return BipartiteState(3, 3, amps)


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i, i in 1..3."""
    if i == 1:
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if i == 2:
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if i == 3:
        return np.array([[1, 0], [0, -1]], dtype=complex)
    raise IndexError(f"Pauli index must be in 1..3, got {i}")


def gell_mann(k: int) -> np.ndarray:
    """Gell-Mann matrix lambda_k, k in 1..8."""
    if k == 1:
        return np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    if k == 2:
        return np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex)
    if k == 3:
        return np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex)
    if k == 4:
        return np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex)
    if k == 5:
        return np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex)
    if k == 6:
        return np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex)
    if k == 7:
        return np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex)
    if k == 8:
        return np.array([[1, 0, 0], [0, 1, 0], [0, 0, -2]], dtype=complex) / SQRT3
    raise IndexError(f"Gell-Mann index must be in 1..8, got {k}")


@dataclass(frozen=True)
class ClosedForm:
    """A coefficient matrix written as ``scalar * generator``."""

    generator_label: str
    scalar: complex
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)


def _bell_closed_form(k: int) -> ClosedForm:
    forms = {
        0: ("I", 1 / SQRT2, np.eye(2, dtype=complex)),
        1: ("sigma_1", 1 / SQRT2, pauli(1)),
        2: ("sigma_2", 1j / SQRT2, pauli(2)),
        3: ("sigma_3", 1 / SQRT2, pauli(3)),
    }
    label, scalar, gen = forms[k]
    return ClosedForm(label, scalar, scalar * gen)


def _qutrit_closed_form(k: int) -> ClosedForm:
    if k == 0:
        return ClosedForm("I", 1 / SQRT3, np.eye(3, dtype=complex) / SQRT3)
    scalar = 1j / SQRT2 if k in (2, 5, 7) else 1 / SQRT2
    return ClosedForm(f"lambda_{k}", scalar, scalar * gell_mann(k))


def basis_coefficient_matrix(basis: str, k: int) -> tuple[np.ndarray, ClosedForm]:
    """Coefficient matrix of a basis state plus its generator closed form.

    ``basis`` is ``"bell"`` (k in 0..3, matrices A_k) or ``"qutrit"``
    (k in 0..8, matrices P_k). The returned matrix and the closed form agree
    entrywise to machine precision.
    """
    if basis == "bell":
        mat = coefficient_matrix(bell_state(k))
        form = _bell_closed_form(k)
    elif basis == "qutrit":
        mat = coefficient_matrix(qutrit_basis_state(k))
        form = _qutrit_closed_form(k)
    else:
        raise ValueError(f"basis must be 'bell' or 'qutrit', got {basis!r}")
    return mat, form


def bell_to_computational(b) -> BipartiteState:
    """Map Bell-basis coefficients to the computational-basis state.

    ``a00 = (b0 + b3)/sqrt(2)``, ``a01 = (b1 + b2)/sqrt(2)``,
    ``a10 = (b1 - b2)/sqrt(2)``, ``a11 = (b0 - b3)/sqrt(2)``. The map is a
    real orthogonal change of basis, so the norm is preserved.
    """
    vec = np.asarray(b, dtype=complex).reshape(-1)
    if vec.size != 4:
        raise ShapeError(f"expected 4 Bell coefficients, got {vec.size}")
    b0, b1, b2, b3 = vec
    amps = np.array([b0 + b3, b1 + b2, b1 - b2, b0 - b3], dtype=complex) / SQRT2
    return make_state(2, 2, amps)


def computational_to_bell(state: BipartiteState) -> np.ndarray:
    """Inverse of :func:`bell_to_computational`: project a 2x2 state onto the Bell basis."""
    if (state.dim_a, state.dim_b) != (2, 2):
        raise ShapeError(f"expected a 2x2 state, got ({state.dim_a}, {state.dim_b})")
    a00, a01, a10, a11 = state.amplitudes
    return np.array([a00 + a11, a01 + a10, a01 - a10, a00 - a11], dtype=complex) / SQRT2
