"""Generator families from the entangled bases and their Lie-algebra checks.

The coefficient matrices of the Bell and entangled-qutrit basis states form,
after a per-member rescaling, the Pauli and Gell-Mann families. This module
carries those families, extracts structure constants by the trace formula
``f_ijk = Tr([G_i, G_j] G_k) / 4i`` (valid for the ``Tr(G^2) = 2``
normalization), and verifies closure ``[G_i, G_j] = 2i f_ijk G_k`` pair by
pair. The extraction is deliberately independent of the standard constant
tables, so matching them doubles as a check of the generator constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import SQRT2, SQRT3, basis_coefficient_matrix
from .errors import ClosureError, ShapeError

#: Frobenius residual above which a commutator pair counts as non-closing.
CLOSURE_TOL = 1e-10


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered family of same-size square matrices with labels.

    ``scalings`` records, per member, the scalar applied relative to the raw
    coefficient-matrix family (None for a raw family). ``group`` is ``"su2"``
    for the Bell family and ``"su3"`` for the qutrit family.
    """

    group: str
    labels: tuple[str, ...]
    members: tuple[np.ndarray, ...]
    scalings: tuple[complex, ...] | None = None

    def __post_init__(self):
        for mat in self.members:
            mat.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.members[0].shape[0]

    def __len__(self) -> int:
        return len(self.members)

    def traceless(self) -> "GeneratorSet":
        """Drop the index-0 member (the identity-like one, not an su(n) generator)."""
        scal = None if self.scalings is None else self.scalings[1:]
        return GeneratorSet(self.group, self.labels[1:], self.members[1:], scal)


@dataclass(frozen=True)
class StructureConstantTable:
    """Antisymmetric structure constants ``f_ijk`` of a closed family."""

    group: str
    labels: tuple[str, ...]
    table: np.ndarray
    max_residual: float

    def __post_init__(self):
        self.table.setflags(write=False)

    def nonzero(self, tol: float = 1e-12) -> list[tuple[int, int, int, float]]:
        """Canonical (i < j < k) nonzero entries as 1-based index triples."""
        n = self.table.shape[0]
        out = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    val = self.table[i, j, k]
                    if abs(val) > tol:
                        out.append((i + 1, j + 1, k + 1, float(val)))
        return out


def bell_family() -> GeneratorSet:
    """Raw coefficient matrices A_0..A_3 of the four Bell states."""
    members = tuple(basis_coefficient_matrix("bell", k)[0] for k in range(4))
    return GeneratorSet("su2", tuple(f"A{k}" for k in range(4)), members)


def qutrit_family() -> GeneratorSet:
    """Raw coefficient matrices P_0..P_8 of the entangled qutrit basis."""
    members = tuple(basis_coefficient_matrix("qutrit", k)[0] for k in range(9))
    return GeneratorSet("su3", tuple(f"P{k}" for k in range(9)), members)


# Rescalings that turn the raw families into the Pauli / Gell-Mann matrices.
# The antisymmetric members (index 2 for su2; 2, 5, 7 for su3) pick up the
# extra phase exp(-i pi / 2) = -i; the identity member is scaled to I.
_SCALINGS = {
    "su2": {0: SQRT2, 2: -1j * SQRT2},
    "su3": {0: SQRT3, 2: -1j * SQRT2, 5: -1j * SQRT2, 7: -1j * SQRT2},
}


def rescale_generators(raw: GeneratorSet) -> GeneratorSet:
    """Apply the per-member rescaling that maps A_k -> sigma_k and P_k -> lambda_k.

    Index 0 maps to the identity (recorded, but excluded from closure tests
    via :meth:`GeneratorSet.traceless`). Raises on an already-rescaled or
    unknown family.
    """
    if raw.scalings is not None:
        raise ValueError("family is already rescaled")
    try:
        special = _SCALINGS[raw.group]
    except KeyError:
        raise ValueError(f"unknown generator family {raw.group!r}") from None
    scalings = tuple(special.get(k, complex(SQRT2)) for k in range(len(raw)))
    members = tuple(s * m for s, m in zip(scalings, raw.members))
    return GeneratorSet(raw.group, tuple(f"{l}'" for l in raw.labels), members, scalings)


def commutator(m: np.ndarray, n: np.ndarray) -> np.ndarray:
    """``m @ n - n @ m`` for square matrices of equal size."""
    m = np.asarray(m, dtype=complex)
    n = np.asarray(n, dtype=complex)
    if m.shape != n.shape or m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"commutator needs equal square matrices, got {m.shape} and {n.shape}")
    return m @ n - n @ m


def extract_structure_constants(
    primed: GeneratorSet, tol: float = CLOSURE_TOL
) -> StructureConstantTable:
    """Extract ``f_ijk`` from a traceless generator family and verify closure.

    Every member must be traceless with ``Tr(G^2) = 2`` (the Pauli /
    Gell-Mann normalization that the trace formula assumes). Raises
    ClosureError, carrying the pairwise residual matrix, when any commutator
    fails ``||[G_i, G_j] - 2i f_ijk G_k|| <= tol`` in Frobenius norm.
    """
    gens = np.stack(primed.members)
    n = gens.shape[0]
    traces = np.einsum("kii->k", gens)
    if np.max(np.abs(traces)) > 1e-12:
        raise ValueError("structure constants need a traceless family; drop the identity member")
    sq_norms = np.einsum("kij,kji->k", gens, gens)
    if np.max(np.abs(sq_norms - 2.0)) > 1e-9:
        raise ValueError("generators must satisfy Tr(G^2) = 2")

    comms = np.einsum("aij,bjk->abik", gens, gens) - np.einsum("bij,ajk->abik", gens, gens)
    f_raw = np.einsum("abij,cji->abc", comms, gens) / 4j
    if np.max(np.abs(f_raw.imag)) > tol:
        raise ClosureError(
            "structure constants have significant imaginary parts",
            residuals=np.max(np.abs(f_raw.imag), axis=2),
            labels=primed.labels,
        )
    f = f_raw.real.copy()

    residual_mats = comms - 2j * np.einsum("abc,cik->abik", f, gens)
    residuals = np.sqrt(np.einsum("abik,abik->ab", residual_mats, residual_mats.conj()).real)
    if np.max(residuals) > tol:
        raise ClosureError(
            f"family does not close under commutation (max residual {np.max(residuals):.3e})",
            residuals=residuals,
            labels=primed.labels,
        )
    return StructureConstantTable(
        group=primed.group,
        labels=primed.labels,
        table=f,
        max_residual=float(np.max(residuals)),
    )


def anti_hermiticity_report(family: GeneratorSet, tol: float = 1e-12) -> list[tuple[str, bool]]:
    """Per-member flags for ``M = -M^H`` (within ``tol`` entrywise)."""
    return [
        (label, bool(np.max(np.abs(mat + mat.conj().T)) <= tol))
        for label, mat in zip(family.labels, family.members)
    ]
