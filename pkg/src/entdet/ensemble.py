"""Haar-random state sampling and statistical scans of the criteria.

Randomness contract: all draws come from numpy's PCG64 generator, never the
platform default. Sample ``i`` of a scan with seed ``s`` uses the substream
``SeedSequence(s, spawn_key=(i,))``, so every sample owns an independent
stream keyed only by ``(s, i)``: samples can be evaluated in any order, or
in parallel, and reproduce bit-identically. The complex Gaussian behind each
amplitude is an explicit Box-Muller transform consuming a fixed number of
uniforms per sample (no rejection loop), so output depends only on the
generator stream, not on sampling internals that may vary across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._validation import check_dims
from .bases import bell_state, qutrit_basis_state
from .criteria import CriterionComparison, compare_criteria
from .errors import DegenerateStateError, RangeError, ShapeError
from .states import BipartiteState, basis_state

#: Number of histogram bins for degree scans, over [0, d^(-d/2)].
HIST_BINS = 50

#: Maximum number of disagreement records retained in a report.
DISAGREEMENT_CAP = 100


def sample_generator(seed: int, index: int) -> np.random.Generator:
    """Independent PCG64 substream for sample ``index`` of a scan with ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def _gaussian_amplitudes(count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` iid standard complex Gaussians via Box-Muller on 2*count uniforms."""
    u = rng.random((count, 2))
    radius = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
    phase = 2.0 * np.pi * u[:, 1]
    return radius * (np.cos(phase) + 1j * np.sin(phase))


def random_pure_state(dim_a: int, dim_b: int, rng: np.random.Generator) -> BipartiteState:
    """Haar-random pure state: normalized independent complex Gaussian amplitudes."""
    dim_a, dim_b = check_dims(dim_a, dim_b)
    z = _gaussian_amplitudes(dim_a * dim_b, rng)
    norm = float(np.linalg.norm(z))
    if norm == 0.0:
        raise DegenerateStateError("all Gaussian draws were zero; use another seed")
    return BipartiteState(dim_a, dim_b, z / norm)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one scan; deterministic given (mode, dim, sample_count, seed).

    ``histogram``/``bin_edges``/``max_degree`` are filled by degree scans,
    ``agreement_rate``/``disagreements`` by agreement scans. The disagreement
    list is capped at DISAGREEMENT_CAP entries; ``disagreement_count`` stays
    exact. Each disagreement is a (source label, comparison) pair.
    """

    mode: str
    dim: int
    sample_count: int
    seed: int
    bound: float
    curated_count: int = 0
    max_degree: float | None = None
    bin_edges: tuple[float, ...] | None = None
    histogram: tuple[int, ...] | None = None
    agreement_rate: float | None = None
    disagreement_count: int = 0
    disagreements: tuple[tuple[str, CriterionComparison], ...] = field(default=())


def _check_scan_dim(dim: int) -> float:
    if dim not in (2, 3):
        raise ShapeError(f"scans cover square dims 2 and 3, got {dim}")
    return float(dim) ** (-dim / 2.0)


def degree_scan(dim: int, samples: int, seed: int) -> ScanReport:
    """Histogram of the entanglement degree |det| over ``samples`` Haar states.

    The bound ``d**(-d/2)`` (1/2 for d=2, 1/(3*sqrt(3)) for d=3) caps the
    histogram range; ``max_degree`` is the unclipped empirical maximum.
    """
    bound = _check_scan_dim(dim)
    if samples < 1:
        raise RangeError(f"need at least one sample, got {samples}")
    mats = np.empty((samples, dim, dim), dtype=complex)
    for i in range(samples):
        mats[i] = random_pure_state(dim, dim, sample_generator(seed, i)).coefficient_matrix()
    degrees = np.abs(np.linalg.det(mats))
    counts, edges = np.histogram(np.minimum(degrees, bound), bins=HIST_BINS, range=(0.0, bound))
    return ScanReport(
        mode="degree",
        dim=dim,
        sample_count=samples,
        seed=seed,
        bound=bound,
        max_degree=float(degrees.max()),
        bin_edges=tuple(float(e) for e in edges),
        histogram=tuple(int(c) for c in counts),
    )


def curated_states(dim: int) -> list[tuple[str, BipartiteState]]:
    """Edge-case states always included in agreement scans.

    d=2: the four Bell states and the four product basis states. d=3: the
    nine entangled basis states, the nine product basis states, and the
    rank-2 state (|00> + |11>)/sqrt(2) (degenerate det, non-unit trace).
    """
    if dim == 2:
        entries = [(f"phi_{k}", bell_state(k)) for k in range(4)]
        entries += [(f"|{i}{mu}>", basis_state(2, 2, i, mu)) for i in range(2) for mu in range(2)]
        return entries
    if dim == 3:
        entries = [(f"beta_{k}", qutrit_basis_state(k)) for k in range(9)]
        entries += [(f"|{i}{mu}>", basis_state(3, 3, i, mu)) for i in range(3) for mu in range(3)]
        amps = np.zeros(9, dtype=complex)
        amps[0] = amps[4] = 1.0 / np.sqrt(2.0)
        entries.append(("(|00>+|11>)/sqrt(2)", BipartiteState(3, 3, amps)))
        return entries
    raise ShapeError(f"no curated list for dim {dim}")


def agreement_scan(
    dim: int,
    samples: int,
    seed: int,
    curated: list[tuple[str, BipartiteState]] | None = None,
) -> ScanReport:
    """Paper rule vs Schmidt oracle over curated edge cases plus Haar samples.

    ``agreement_rate`` counts both groups. ``curated`` overrides the default
    edge-case list (used to exercise the disagreement cap).
    """
    bound = _check_scan_dim(dim)
    if samples < 0:
        raise RangeError(f"sample count must be nonnegative, got {samples}")
    entries = curated_states(dim) if curated is None else list(curated)

    agreeing = 0
    disagreement_count = 0
    kept: list[tuple[str, CriterionComparison]] = []

    def record(label: str, state: BipartiteState) -> None:
        nonlocal agreeing, disagreement_count
        comparison = compare_criteria(state)
        if comparison.agree:
            agreeing += 1
            return
        disagreement_count += 1
        if len(kept) < DISAGREEMENT_CAP:
            kept.append((label, comparison))

    for label, state in entries:
        record(label, state)
    for i in range(samples):
        record(f"sample_{i}", random_pure_state(dim, dim, sample_generator(seed, i)))

    total = len(entries) + samples
    return ScanReport(
        mode="agreement",
        dim=dim,
        sample_count=samples,
        seed=seed,
        bound=bound,
        curated_count=len(entries),
        agreement_rate=agreeing / total if total else 1.0,
        disagreement_count=disagreement_count,
        disagreements=tuple(kept),
    )
