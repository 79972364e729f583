import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import Pipeline

from entdet import (
    EntanglementClassifier,
    SchmidtCoefficients,
    ShapeError,
    basis_state,
    bell_state,
    make_state,
    qutrit_basis_state,
)

SQRT2 = np.sqrt(2.0)


def qubit_batch():
    return np.stack(
        [
            bell_state(0).amplitudes,
            basis_state(2, 2, 0, 0).amplitudes,
            make_state(2, 2, [0.6, 0, 0, 0.8]).amplitudes,
        ]
    )


class TestEntanglementClassifier:
    def test_oracle_labels(self):
        X = qubit_batch()
        clf = EntanglementClassifier().fit(X)
        assert list(clf.predict(X)) == ["maximally_entangled", "unentangled", "entangled"]

    def test_paper_method_on_qubits(self):
        X = qubit_batch()
        clf = EntanglementClassifier(method="paper").fit(X)
        assert list(clf.predict(X)) == ["maximally_entangled", "unentangled", "entangled"]

    def test_paper_method_documents_qutrit_misfire(self):
        X = np.stack([basis_state(3, 3, 0, 1).amplitudes, qutrit_basis_state(0).amplitudes])
        paper = EntanglementClassifier(dims=(3, 3), method="paper").fit(X)
        oracle = EntanglementClassifier(dims=(3, 3), method="oracle").fit(X)
        assert list(paper.predict(X)) == ["entangled", "entangled"]
        assert list(oracle.predict(X)) == ["unentangled", "maximally_entangled"]

    def test_score_samples_returns_degree(self):
        X = qubit_batch()
        clf = EntanglementClassifier().fit(X)
        np.testing.assert_allclose(clf.score_samples(X), [0.5, 0.0, 0.48], atol=1e-12)

    def test_fit_sets_sklearn_attributes(self):
        X = qubit_batch()
        clf = EntanglementClassifier().fit(X)
        assert clf.n_features_in_ == 4
        assert set(clf.classes_) == {"unentangled", "entangled", "maximally_entangled"}

    def test_predict_before_fit_raises(self):
        with pytest.raises(NotFittedError):
            EntanglementClassifier().predict(qubit_batch())

    def test_bad_method_rejected_at_fit(self):
        with pytest.raises(ValueError):
            EntanglementClassifier(method="guess").fit(qubit_batch())

    def test_row_length_must_match_dims(self):
        X = np.ones((2, 6), dtype=complex) / np.sqrt(6.0)
        with pytest.raises(ShapeError):
            EntanglementClassifier(dims=(2, 2)).fit(X)

    def test_unnormalized_rows_rejected_by_default(self):
        X = np.array([[1.0, 0.0, 0.0, 1.0]], dtype=complex)
        clf = EntanglementClassifier().fit(X / np.linalg.norm(X))
        with pytest.raises(ShapeError):
            clf.predict(X)
        assert EntanglementClassifier(normalize=True).fit(X).predict(X)[0] == (
            "maximally_entangled"
        )

    def test_paper_method_needs_square_supported_dims(self):
        X = np.zeros((1, 6), dtype=complex)
        X[0, 0] = 1.0
        clf = EntanglementClassifier(dims=(2, 3), method="paper").fit(X)
        with pytest.raises(ShapeError):
            clf.predict(X)

    def test_clone_and_params_round_trip(self):
        clf = EntanglementClassifier(dims=(3, 3), method="paper", det_tol=1e-6)
        params = clone(clf).get_params()
        assert params["dims"] == (3, 3)
        assert params["method"] == "paper"
        assert params["det_tol"] == 1e-6


class TestSchmidtCoefficients:
    def test_transform_values(self):
        X = qubit_batch()
        out = SchmidtCoefficients().fit(X).transform(X)
        np.testing.assert_allclose(
            out, [[1 / SQRT2, 1 / SQRT2], [1.0, 0.0], [0.8, 0.6]], atol=1e-12
        )

    def test_rectangular_dims(self):
        X = np.zeros((1, 6), dtype=complex)
        X[0, 0] = X[0, 4] = 1 / SQRT2
        out = SchmidtCoefficients(dims=(2, 3)).fit(X).transform(X)
        assert out.shape == (1, 2)
        np.testing.assert_allclose(out, [[1 / SQRT2, 1 / SQRT2]], atol=1e-12)

    def test_feature_names(self):
        assert list(SchmidtCoefficients(dims=(3, 3)).get_feature_names_out()) == [
            "schmidt_0",
            "schmidt_1",
            "schmidt_2",
        ]

    def test_works_in_pipeline(self):
        X = qubit_batch()
        pipe = Pipeline([("schmidt", SchmidtCoefficients())])
        out = pipe.fit_transform(X)
        assert out.shape == (3, 2)

    def test_transform_before_fit_raises(self):
        with pytest.raises(NotFittedError):
            SchmidtCoefficients().transform(qubit_batch())
