"""Estimator-style front end for batch classification and Schmidt extraction.

Rows of ``X`` are amplitude vectors of length ``dim_a * dim_b`` (index
``i * dim_b + mu``), complex dtype accepted. Both estimators are stateless
in the scikit-learn sense: ``fit`` only validates input and records shape,
so they work inside pipelines and cross-validation but learn nothing.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_amplitude_rows, check_dims
from .criteria import (
    DEFAULT_DET_TOL,
    DEFAULT_MAX_TOL,
    entanglement_degree,
    qubit_det_test,
    qutrit_paper_criterion,
    schmidt_rank_oracle,
)
from .errors import ShapeError
from .schmidt import DEFAULT_RANK_TOL, schmidt_decompose
from .states import BipartiteState

_ROW_NORM_TOL = 1e-6


class _AmplitudeRowMixin:
    """Shared row validation: shape checks plus the normalization policy."""

    def _n_features(self) -> int:
        dim_a, dim_b = check_dims(*self.dims)
        return dim_a * dim_b

    def _validate(self, X, reset: bool) -> np.ndarray:
        X = check_amplitude_rows(X, self._n_features())
        if reset:
            self.n_features_in_ = X.shape[1]
        return X

    def _row_state(self, row: np.ndarray) -> BipartiteState:
        norm = float(np.linalg.norm(row))
        if norm == 0.0:
            raise ShapeError("zero amplitude row")
        if not self.normalize and abs(norm - 1.0) > _ROW_NORM_TOL:
            raise ShapeError(
                f"row norm {norm:.6g} is not 1 within {_ROW_NORM_TOL}; "
                "pass normalize=True to renormalize"
            )
        return BipartiteState(self.dims[0], self.dims[1], np.asarray(row, dtype=complex) / norm)


class EntanglementClassifier(_AmplitudeRowMixin, BaseEstimator):
    """Classify amplitude rows as unentangled / entangled / maximally entangled.

    ``method="oracle"`` uses the Schmidt-rank ground truth (any dims);
    ``method="paper"`` uses the determinant rule for 2x2 and the
    determinant-plus-trace rule for 3x3 (other dims raise). The paper route
    is kept separate from the oracle on purpose: disagreements are data.
    """

    def __init__(
        self,
        dims: tuple[int, int] = (2, 2),
        method: str = "oracle",
        det_tol: float = DEFAULT_DET_TOL,
        max_tol: float = DEFAULT_MAX_TOL,
        normalize: bool = False,
    ):
        self.dims = dims
        self.method = method
        self.det_tol = det_tol
        self.max_tol = max_tol
        self.normalize = normalize

    def fit(self, X, y=None):
        if self.method not in ("oracle", "paper"):
            raise ValueError(f"method must be 'oracle' or 'paper', got {self.method!r}")
        X = self._validate(X, reset=True)
        self.classes_ = np.array(["entangled", "maximally_entangled", "unentangled"])
        return self

    def _classify_row(self, row: np.ndarray) -> str:
        state = self._row_state(row)
        if self.method == "oracle":
            verdict = schmidt_rank_oracle(state, max_tol=self.max_tol)
        elif state.dim_a == state.dim_b == 2:
            verdict = qubit_det_test(state, tol=self.det_tol)
        elif state.dim_a == state.dim_b == 3:
            verdict = qutrit_paper_criterion(state, tol=self.det_tol)
        else:
            raise ShapeError(f"no paper rule for dims {self.dims}; use method='oracle'")
        return verdict.classification.value

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = self._validate(X, reset=False)
        return np.array([self._classify_row(row) for row in X])

    def score_samples(self, X) -> np.ndarray:
        """Entanglement degree |det| per row (square dims only)."""
        check_is_fitted(self)
        X = self._validate(X, reset=False)
        return np.array([entanglement_degree(self._row_state(row)) for row in X])


class SchmidtCoefficients(_AmplitudeRowMixin, TransformerMixin, BaseEstimator):
    """Map amplitude rows to their ``min(dim_a, dim_b)`` Schmidt coefficients.

    Output columns are sorted descending (singular-value order), so column 0
    is the dominant coefficient and a row of a product state reads
    ``(1, 0, ...)``.
    """

    def __init__(
        self,
        dims: tuple[int, int] = (2, 2),
        rank_tol: float = DEFAULT_RANK_TOL,
        normalize: bool = False,
    ):
        self.dims = dims
        self.rank_tol = rank_tol
        self.normalize = normalize

    def fit(self, X, y=None):
        self._validate(X, reset=True)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self)
        X = self._validate(X, reset=False)
        out = np.empty((X.shape[0], min(self.dims)), dtype=float)
        for j, row in enumerate(X):
            out[j] = schmidt_decompose(self._row_state(row), tol=self.rank_tol).coefficients
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        return np.array([f"schmidt_{j}" for j in range(min(self.dims))], dtype=object)
