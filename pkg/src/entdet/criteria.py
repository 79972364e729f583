"""Entanglement classification rules and their comparison.

Two kinds of method live here. The determinant/trace rules (``qubit_det_test``,
``bell_basis_test``, ``qutrit_paper_criterion``) are cheap thumbrules that read
off the coefficient matrix; the 3x3 rule is implemented exactly as stated,
heuristic warts included (it misfires on off-diagonal product states such as
``|01>``). The Schmidt-rank oracle is the ground truth, and
``compare_criteria`` records where rule and oracle disagree rather than
papering over it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ._validation import check_bell_coefficients, check_square
from .errors import ShapeError
from .schmidt import DEFAULT_RANK_TOL, reduced_density_a, schmidt_decompose
from .states import BipartiteState, coefficient_matrix

#: Default tolerance on |det| when deciding zero / maximal.
DEFAULT_DET_TOL = 1e-8
#: Default max-norm tolerance on the distance of rho_A from I/d.
DEFAULT_MAX_TOL = 1e-6


class Classification(Enum):
    UNENTANGLED = "unentangled"
    ENTANGLED = "entangled"
    MAXIMALLY_ENTANGLED = "maximally_entangled"


class Method(Enum):
    QUBIT_DET = "qubit_det"
    BELL_BASIS = "bell_basis"
    QUTRIT_PAPER = "qutrit_paper"
    SCHMIDT_ORACLE = "schmidt_oracle"


@dataclass(frozen=True)
class EntanglementVerdict:
    """Classification plus the scalar evidence it was based on."""

    classification: Classification
    method: Method
    evidence: dict[str, float] = field(default_factory=dict)

    @property
    def is_entangled(self) -> bool:
        """Entangled-side flag; maximal entanglement counts as entangled."""
        return self.classification is not Classification.UNENTANGLED


@dataclass(frozen=True)
class CriterionComparison:
    """Paper rule vs Schmidt oracle on one state."""

    paper_verdict: EntanglementVerdict
    oracle_verdict: EntanglementVerdict
    agree: bool
    state_fingerprint: tuple

    @staticmethod
    def from_verdicts(paper, oracle, state) -> "CriterionComparison":
        return CriterionComparison(
            paper_verdict=paper,
            oracle_verdict=oracle,
            agree=paper.is_entangled == oracle.is_entangled,
            state_fingerprint=tuple(state.amplitudes.tolist()),
        )


def entanglement_degree(state: BipartiteState) -> float:
    """``|det|`` of the coefficient matrix; larger means more entangled.

    Only defined for square states. Bounded by ``d**(-d/2)``: 1/2 for d=2,
    ``1/(3 sqrt(3))`` for d=3.
    """
    check_square(state)
    return float(abs(np.linalg.det(coefficient_matrix(state))))


def qubit_det_test(state: BipartiteState, tol: float = DEFAULT_DET_TOL) -> EntanglementVerdict:
    """Determinant rule for 2x2 states.

    Unentangled iff ``|det A| <= tol``; maximally entangled iff
    ``|det A| >= 1/2 - tol``; entangled otherwise.
    """
    check_square(state, 2)
    det_abs = entanglement_degree(state)
    if det_abs <= tol:
        cls = Classification.UNENTANGLED
    elif det_abs >= 0.5 - tol:
        cls = Classification.MAXIMALLY_ENTANGLED
    else:
        cls = Classification.ENTANGLED
    return EntanglementVerdict(cls, Method.QUBIT_DET, {"det_abs": det_abs, "tol": tol})


def bell_basis_test(b, tol: float = DEFAULT_DET_TOL) -> EntanglementVerdict:
    """Determinant rule evaluated directly on Bell-basis coefficients.

    For real normalized ``b = (b0, b1, b2, b3)`` the coefficient matrix in
    the computational basis has
    ``det C = ((b0^2 + b2^2) - (b1^2 + b3^2)) / 2``, so the state is
    unentangled exactly when the two Bell-sector weights balance. The
    threshold is applied to ``|det C|`` so the verdict coincides with
    ``qubit_det_test`` on the computational-basis image.
    """
    vec = check_bell_coefficients(b)
    b0, b1, b2, b3 = vec
    balance = float((b0 * b0 + b2 * b2) - (b1 * b1 + b3 * b3))
    det_abs = abs(balance) / 2.0
    if det_abs <= tol:
        cls = Classification.UNENTANGLED
    elif det_abs >= 0.5 - tol:
        cls = Classification.MAXIMALLY_ENTANGLED
    else:
        cls = Classification.ENTANGLED
    return EntanglementVerdict(
        cls,
        Method.BELL_BASIS,
        {"det_abs": det_abs, "sector_balance": float(balance), "tol": tol},
    )


def qutrit_paper_criterion(
    state: BipartiteState, tol: float = DEFAULT_DET_TOL
) -> EntanglementVerdict:
    """Determinant-plus-trace rule for 3x3 states, exactly as printed.

    Unentangled iff ``|det P| <= tol`` and ``|Tr P|`` lies within ``tol``
    of 1; entangled otherwise. This rule is heuristic: the trace condition
    is basis-dependent and misclassifies product states whose single
    amplitude sits off the diagonal (use ``compare_criteria`` to see where).
    """
    check_square(state, 3)
    mat = coefficient_matrix(state)
    det = complex(np.linalg.det(mat))
    trace = complex(np.trace(mat))
    unentangled = abs(det) <= tol and abs(abs(trace) - 1.0) <= tol
    cls = Classification.UNENTANGLED if unentangled else Classification.ENTANGLED
    return EntanglementVerdict(
        cls,
        Method.QUTRIT_PAPER,
        {
            "det_abs": abs(det),
            "trace_abs": abs(trace),
            "trace_re": trace.real,
            "trace_im": trace.imag,
            "tol": tol,
        },
    )


def schmidt_rank_oracle(
    state: BipartiteState,
    tol: float = DEFAULT_RANK_TOL,
    max_tol: float = DEFAULT_MAX_TOL,
) -> EntanglementVerdict:
    """Ground-truth classification from the Schmidt coefficients.

    Unentangled iff the Schmidt rank is 1; maximally entangled iff all
    ``min(dim_a, dim_b)`` coefficients sit within ``max_tol`` of
    ``1/sqrt(min(dim_a, dim_b))``.
    """
    dec = schmidt_decompose(state, tol=tol)
    d_min = min(state.dim_a, state.dim_b)
    target = 1.0 / np.sqrt(d_min)
    max_dev = float(np.max(np.abs(dec.coefficients - target)))
    if dec.rank <= 1:
        cls = Classification.UNENTANGLED
    elif max_dev <= max_tol:
        cls = Classification.MAXIMALLY_ENTANGLED
    else:
        cls = Classification.ENTANGLED
    return EntanglementVerdict(
        cls,
        Method.SCHMIDT_ORACLE,
        {"rank": float(dec.rank), "coefficient_deviation": max_dev, "tol": tol},
    )


def is_maximally_entangled(state: BipartiteState, tol: float = DEFAULT_MAX_TOL) -> bool:
    """True iff ``rho_A`` lies within ``tol`` of ``I/d`` in max norm (square states)."""
    d = check_square(state)
    rho = reduced_density_a(state)
    return bool(np.max(np.abs(rho - np.eye(d) / d)) <= tol)


def compare_criteria(state: BipartiteState, tol: float = DEFAULT_DET_TOL) -> CriterionComparison:
    """Run the dimension-appropriate paper rule against the oracle.

    Supports square states of dimension 2 or 3; ``agree`` is judged at the
    entangled/unentangled level (maximal counts as entangled).
    """
    d = check_square(state)
    if d == 2:
        paper = qubit_det_test(state, tol=tol)
    elif d == 3:
        paper = qutrit_paper_criterion(state, tol=tol)
    else:
        raise ShapeError(f"paper rules exist only for 2x2 and 3x3 states, got {d}x{d}")
    oracle = schmidt_rank_oracle(state)
    return CriterionComparison.from_verdicts(paper, oracle, state)
