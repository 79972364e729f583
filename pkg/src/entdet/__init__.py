"""Determinant and trace rules for bipartite entanglement.

Builds bipartite qubit/qutrit pure states, decides entanglement from the
coefficient-matrix determinant (and trace, for qutrits), and cross-checks
every shortcut rule against the Schmidt decomposition. Also constructs the
Bell and entangled-qutrit bases whose coefficient matrices rescale to the
Pauli and Gell-Mann generators, verifies the su(2)/su(3) commutator algebra,
and runs seeded statistical scans over Haar-random states.
"""

from .algebra import (
    CLOSURE_TOL,
    GeneratorSet,
    StructureConstantTable,
    anti_hermiticity_report,
    bell_family,
    commutator,
    extract_structure_constants,
    qutrit_family,
    rescale_generators,
)
from .bases import (
    ClosedForm,
    basis_coefficient_matrix,
    bell_state,
    bell_to_computational,
    computational_to_bell,
    gell_mann,
    pauli,
    qutrit_basis_state,
)
from .criteria import (
    DEFAULT_DET_TOL,
    DEFAULT_MAX_TOL,
    Classification,
    CriterionComparison,
    EntanglementVerdict,
    Method,
    bell_basis_test,
    compare_criteria,
    entanglement_degree,
    is_maximally_entangled,
    qubit_det_test,
    qutrit_paper_criterion,
    schmidt_rank_oracle,
)
from .ensemble import (
    DISAGREEMENT_CAP,
    HIST_BINS,
    ScanReport,
    agreement_scan,
    curated_states,
    degree_scan,
    random_pure_state,
    sample_generator,
)
from .errors import (
    ClosureError,
    DegenerateStateError,
    DocumentError,
    EntdetError,
    RangeError,
    ShapeError,
)
from .estimators import EntanglementClassifier, SchmidtCoefficients
from .schmidt import (
    DEFAULT_RANK_TOL,
    SchmidtDecomposition,
    qubit_eigenvalues_closed_form,
    reduced_density_a,
    reduced_density_b,
    schmidt_decompose,
    schmidt_rank,
)
from .states import (
    BipartiteState,
    basis_state,
    coefficient_matrix,
    make_state,
    state_from_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteState",
    "Classification",
    "ClosedForm",
    "ClosureError",
    "CLOSURE_TOL",
    "CriterionComparison",
    "DEFAULT_DET_TOL",
    "DEFAULT_MAX_TOL",
    "DEFAULT_RANK_TOL",
    "DegenerateStateError",
    "DISAGREEMENT_CAP",
    "DocumentError",
    "EntanglementClassifier",
    "EntanglementVerdict",
    "EntdetError",
    "GeneratorSet",
    "HIST_BINS",
    "Method",
    "RangeError",
    "ScanReport",
    "SchmidtCoefficients",
    "SchmidtDecomposition",
    "ShapeError",
    "StructureConstantTable",
    "agreement_scan",
    "anti_hermiticity_report",
    "basis_coefficient_matrix",
    "basis_state",
    "bell_basis_test",
    "bell_family",
    "bell_state",
    "bell_to_computational",
    "coefficient_matrix",
    "commutator",
    "compare_criteria",
    "computational_to_bell",
    "curated_states",
    "degree_scan",
    "entanglement_degree",
    "extract_structure_constants",
    "gell_mann",
    "is_maximally_entangled",
    "make_state",
    "pauli",
    "qubit_det_test",
    "qubit_eigenvalues_closed_form",
    "qutrit_basis_state",
    "qutrit_family",
    "qutrit_paper_criterion",
    "random_pure_state",
    "reduced_density_a",
    "reduced_density_b",
    "rescale_generators",
    "sample_generator",
    "schmidt_decompose",
    "schmidt_rank",
    "schmidt_rank_oracle",
    "state_from_matrix",
]
