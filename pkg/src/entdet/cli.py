"""Command-line front door: classify, schmidt, basis, algebra, scan.

Exit codes: 0 analysis completed (for ``algebra``, closure holds);
1 verification failure; 2 input error. No other codes.

Machine output (``--output machine``) is JSON with sorted keys and no
timestamps, so identical inputs produce byte-identical reports. Reports
validate against ``schemas/report.schema.json`` shipped inside the package;
the input file format is described by ``schemas/state.schema.json``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

import numpy as np

from .algebra import (
    bell_family,
    anti_hermiticity_report,
    extract_structure_constants,
    qutrit_family,
    rescale_generators,
)
from .bases import basis_coefficient_matrix, bell_state, bell_to_computational, qutrit_basis_state
from .criteria import (
    DEFAULT_DET_TOL,
    DEFAULT_MAX_TOL,
    EntanglementVerdict,
    compare_criteria,
    entanglement_degree,
    is_maximally_entangled,
    schmidt_rank_oracle,
)
from .ensemble import ScanReport, agreement_scan, degree_scan
from .errors import ClosureError, DegenerateStateError, DocumentError, EntdetError
from .schmidt import DEFAULT_RANK_TOL, schmidt_decompose
from .states import BipartiteState, make_state

try:
    TOOL_VERSION = version("entdet")
except PackageNotFoundError:
    TOOL_VERSION = "0+unknown"

#: Inputs whose norm differs from 1 by more than this are rejected unless
#: --normalize is given.
INPUT_NORM_TOL = 1e-6

# Values recognized in text output; shown next to the digits when a printed
# number is within 1e-9 of an entry (in absolute value).
SURD_TABLE: tuple[tuple[str, float], ...] = (
    ("1/sqrt(2)", 1.0 / np.sqrt(2.0)),
    ("1/sqrt(3)", 1.0 / np.sqrt(3.0)),
    ("1/sqrt(6)", 1.0 / np.sqrt(6.0)),
    ("2/sqrt(6)", 2.0 / np.sqrt(6.0)),
    ("1/2", 0.5),
    ("sqrt(3)/4", np.sqrt(3.0) / 4.0),
    ("1/(3*sqrt(3))", 1.0 / (3.0 * np.sqrt(3.0))),
    ("1/(3*sqrt(6))", 1.0 / (3.0 * np.sqrt(6.0))),
    ("sqrt(3)/2", np.sqrt(3.0) / 2.0),
)

SURD_MATCH_TOL = 1e-9


def annotate(value: float) -> str:
    """Render a float, appending the matching surd name when one is close."""
    value = float(value)
    for label, surd in SURD_TABLE:
        if abs(abs(value) - surd) <= SURD_MATCH_TOL:
            sign = "-" if value < 0 else ""
            return f"{value!r} (= {sign}{label})"
    return repr(float(value))


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _pairs(vec) -> list[list[float]]:
    return [_pair(z) for z in np.asarray(vec).reshape(-1)]


def _matrix_pairs(mat: np.ndarray) -> list[list[list[float]]]:
    return [[_pair(z) for z in row] for row in mat]


def _fingerprint(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _state_fingerprint(state: BipartiteState) -> str:
    return _fingerprint(
        {"dims": [state.dim_a, state.dim_b], "amplitudes": _pairs(state.amplitudes)}
    )


def _verdict_payload(verdict: EntanglementVerdict) -> dict:
    return {
        "classification": verdict.classification.value,
        "method": verdict.method.value,
        "evidence": {key: float(val) for key, val in verdict.evidence.items()},
    }


def _emit(args, command: str, fingerprint: str, tolerances: dict, result: dict,
          text_lines: list[str]) -> None:
    if args.output == "machine":
        report = {
            "tool": "entdet",
            "version": TOOL_VERSION,
            "command": command,
            "tolerances": tolerances,
            "input_fingerprint": fingerprint,
            "result": result,
        }
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# state input


def _finish_state(dim_a: int, dim_b: int, amplitudes, normalize: bool) -> BipartiteState:
    amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise DegenerateStateError("amplitudes have zero norm")
    if not normalize and abs(norm - 1.0) > INPUT_NORM_TOL:
        raise DocumentError(
            f"input norm {norm:.8g} differs from 1 by more than {INPUT_NORM_TOL}; "
            "pass --normalize to renormalize"
        )
    return make_state(dim_a, dim_b, amps)


def _parse_amplitude_entry(entry) -> complex:
    if isinstance(entry, (int, float)):
        return complex(entry)
    if isinstance(entry, list) and len(entry) == 2 and all(
        isinstance(x, (int, float)) for x in entry
    ):
        return complex(entry[0], entry[1])
    raise DocumentError(f"amplitude entries must be numbers or [re, im] pairs, got {entry!r}")


def load_state_document(path: str, normalize: bool) -> BipartiteState:
    """Read a state document: dims, amplitudes as [re, im] pairs, optional basis tag."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("state document must be a JSON object")

    dims = doc.get("dims")
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) and d >= 2 for d in dims)
    ):
        raise DocumentError("'dims' must be a pair of integers >= 2")
    dim_a, dim_b = dims

    basis = doc.get("basis", "computational")
    raw = doc.get("amplitudes")
    if not isinstance(raw, list):
        raise DocumentError("'amplitudes' must be a list")
    amps = np.array([_parse_amplitude_entry(entry) for entry in raw], dtype=complex)

    if basis == "computational":
        if amps.size != dim_a * dim_b:
            raise DocumentError(
                f"expected {dim_a * dim_b} amplitudes for dims {dims}, got {amps.size}"
            )
        return _finish_state(dim_a, dim_b, amps, normalize)
    if basis == "bell":
        if dims != [2, 2]:
            raise DocumentError("basis 'bell' requires dims [2, 2]")
        if amps.size != 4:
            raise DocumentError(f"expected 4 Bell coefficients, got {amps.size}")
        if np.max(np.abs(amps.imag)) > 1e-9:
            raise DocumentError("Bell coefficients must be real")
        b = amps.real
        norm = float(np.linalg.norm(b))
        if norm == 0.0:
            raise DegenerateStateError("Bell coefficients have zero norm")
        if not normalize and abs(norm - 1.0) > INPUT_NORM_TOL:
            raise DocumentError(
                f"input norm {norm:.8g} differs from 1 by more than {INPUT_NORM_TOL}; "
                "pass --normalize to renormalize"
            )
        return bell_to_computational(b / norm)
    raise DocumentError(f"basis must be 'computational' or 'bell', got {basis!r}")


def _parse_dims_flag(text: str) -> tuple[int, int]:
    parts = [p.strip() for p in text.split(",")]
    try:
        dims = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise DocumentError(f"--dims must look like '2,2', got {text!r}") from exc
    if len(dims) != 2 or any(d < 2 for d in dims):
        raise DocumentError(f"--dims must be two integers >= 2, got {text!r}")
    return dims


def resolve_state(args) -> BipartiteState:
    """Build the input state from --input, --amps, or --theta."""
    if args.theta is not None:
        theta = float(args.theta)
        amps = np.array([np.cos(theta), 0.0, 0.0, np.sin(theta)], dtype=complex)
        return make_state(2, 2, amps)
    if args.amps is not None:
        tokens = [tok.strip() for tok in args.amps.split(",") if tok.strip()]
        try:
            values = [float(tok) for tok in tokens]
        except ValueError as exc:
            raise DocumentError(f"--amps must be comma-separated reals, got {args.amps!r}") from exc
        if args.dims is not None:
            dim_a, dim_b = _parse_dims_flag(args.dims)
        else:
            side = round(len(values) ** 0.5)
            if side * side != len(values) or side < 2:
                raise DocumentError(
                    f"cannot infer dims from {len(values)} amplitudes; pass --dims"
                )
            dim_a = dim_b = side
        if dim_a * dim_b != len(values):
            raise DocumentError(
                f"--dims {dim_a},{dim_b} needs {dim_a * dim_b} amplitudes, got {len(values)}"
            )
        return _finish_state(dim_a, dim_b, values, args.normalize)
    return load_state_document(args.input, args.normalize)


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    state = resolve_state(args)
    det_tol = args.tol if args.tol is not None else DEFAULT_DET_TOL
    dim_a, dim_b = state.dim_a, state.dim_b
    warnings: list[str] = []

    oracle = schmidt_rank_oracle(state)
    result: dict = {
        "dims": [dim_a, dim_b],
        "renormalized": state.was_renormalized,
        "oracle": _verdict_payload(oracle),
        "paper": None,
        "agree": None,
        "degree": None,
        "maximally_entangled": None,
        "warnings": warnings,
    }
    if dim_a == dim_b:
        result["degree"] = entanglement_degree(state)
        result["maximally_entangled"] = is_maximally_entangled(state, tol=DEFAULT_MAX_TOL)
        if dim_a in (2, 3):
            comparison = compare_criteria(state, tol=det_tol)
            result["paper"] = _verdict_payload(comparison.paper_verdict)
            result["agree"] = comparison.agree
        else:
            warnings.append(f"no determinant/trace rule for {dim_a}x{dim_b}; oracle verdict only")
    else:
        warnings.append(f"no determinant/trace rule for {dim_a}x{dim_b}; oracle verdict only")

    lines = [f"state: {dim_a}x{dim_b}" + (" (renormalized)" if state.was_renormalized else "")]
    if result["degree"] is not None:
        lines.append(f"degree |det|: {annotate(result['degree'])}")
    if result["paper"] is not None:
        lines.append(
            f"paper rule [{result['paper']['method']}]: {result['paper']['classification']}"
        )
    lines.append(f"oracle [schmidt_oracle]: {result['oracle']['classification']}")
    if result["agree"] is not None:
        lines.append("agreement: " + ("yes" if result["agree"] else "NO (disagreement)"))
    if result["maximally_entangled"] is not None:
        lines.append(
            "maximally entangled: " + ("yes" if result["maximally_entangled"] else "no")
        )
    lines.extend(f"warning: {w}" for w in warnings)

    _emit(
        args,
        "classify",
        _state_fingerprint(state),
        {"det_tol": det_tol, "max_tol": DEFAULT_MAX_TOL, "rank_tol": DEFAULT_RANK_TOL},
        result,
        lines,
    )
    return 0


def cmd_schmidt(args) -> int:
    state = resolve_state(args)
    rank_tol = args.tol if args.tol is not None else DEFAULT_RANK_TOL
    dec = schmidt_decompose(state, tol=rank_tol)
    residual = float(np.linalg.norm(dec.reconstruct() - state.amplitudes))
    result = {
        "dims": [state.dim_a, state.dim_b],
        "renormalized": state.was_renormalized,
        "coefficients": [float(c) for c in dec.coefficients],
        "rank": dec.rank,
        "reconstruction_residual": residual,
    }
    lines = [
        f"state: {state.dim_a}x{state.dim_b}"
        + (" (renormalized)" if state.was_renormalized else ""),
        "schmidt coefficients: " + ", ".join(annotate(c) for c in dec.coefficients),
        f"schmidt rank: {dec.rank} (tol {rank_tol:g})",
        f"reconstruction residual: {residual:.3e}",
    ]
    _emit(
        args,
        "schmidt",
        _state_fingerprint(state),
        {"rank_tol": rank_tol},
        result,
        lines,
    )
    return 0


_FAMILY_SIZE = {"bell": 4, "qutrit": 9}


def cmd_basis(args) -> int:
    family, k = args.family, args.index
    if not 0 <= k < _FAMILY_SIZE[family]:
        raise DocumentError(
            f"--index for family {family!r} must be in 0..{_FAMILY_SIZE[family] - 1}, got {k}"
        )
    state = bell_state(k) if family == "bell" else qutrit_basis_state(k)
    mat, form = basis_coefficient_matrix(family, k)
    det = complex(np.linalg.det(mat))
    trace = complex(np.trace(mat))
    result = {
        "family": family,
        "index": k,
        "amplitudes": _pairs(state.amplitudes),
        "coefficient_matrix": _matrix_pairs(mat),
        "det": _pair(det),
        "det_abs": abs(det),
        "trace": _pair(trace),
        "closed_form": {
            "generator": form.generator_label,
            "scalar": _pair(form.scalar),
        },
    }
    scalar_text = "i/sqrt(2)" if abs(form.scalar.imag) > 0 else None
    if scalar_text is None:
        scalar_text = annotate(form.scalar.real)
    lines = [
        f"{family} basis state {k}",
        f"coefficient matrix = {scalar_text} * {form.generator_label}",
        f"det: {annotate(det.real)}" if abs(det.imag) < 1e-15 else f"det: {det}",
        f"|det|: {annotate(abs(det))}",
        f"trace: {annotate(trace.real)}" if abs(trace.imag) < 1e-15 else f"trace: {trace}",
    ]
    _emit(
        args,
        "basis",
        _fingerprint({"family": family, "index": k}),
        {},
        result,
        lines,
    )
    return 0


def cmd_algebra(args) -> int:
    raw = bell_family() if args.group == "su2" else qutrit_family()
    primed = rescale_generators(raw)
    table = extract_structure_constants(primed.traceless())
    flags = anti_hermiticity_report(raw)
    anti = [label for label, is_anti in flags if is_anti]
    constants = [
        {"i": i, "j": j, "k": k, "value": value} for i, j, k, value in table.nonzero()
    ]
    result = {
        "group": args.group,
        "labels": list(raw.labels),
        "closure_residual": table.max_residual,
        "structure_constants": constants,
        "anti_hermitian_members": anti,
    }
    lines = [
        f"group: {args.group} (members {', '.join(raw.labels)})",
        f"closure residual: {table.max_residual:.3e} (tol 1e-10)",
        "nonzero structure constants f_ijk (i<j<k):",
    ]
    lines += [f"  f_{i}{j}{k} = {annotate(value)}" for i, j, k, value in table.nonzero()]
    lines.append(
        "anti-hermitian members: " + (", ".join(anti) if anti else "none")
    )
    _emit(
        args,
        "algebra",
        _fingerprint({"group": args.group}),
        {"closure_tol": 1e-10},
        result,
        lines,
    )
    return 0


def _scan_payload(report: ScanReport) -> dict:
    disagreements = [
        {
            "source": label,
            "paper": _verdict_payload(comparison.paper_verdict),
            "oracle": _verdict_payload(comparison.oracle_verdict),
            "agree": comparison.agree,
            "state": _pairs(np.array(comparison.state_fingerprint)),
        }
        for label, comparison in report.disagreements
    ]
    return {
        "mode": report.mode,
        "dim": report.dim,
        "sample_count": report.sample_count,
        "seed": report.seed,
        "bound": report.bound,
        "curated_count": report.curated_count,
        "max_degree": report.max_degree,
        "bin_edges": None if report.bin_edges is None else list(report.bin_edges),
        "histogram": None if report.histogram is None else list(report.histogram),
        "agreement_rate": report.agreement_rate,
        "disagreement_count": report.disagreement_count,
        "disagreements": disagreements,
    }


def cmd_scan(args) -> int:
    if args.mode == "degree":
        report = degree_scan(args.dim, args.samples, args.seed)
    else:
        report = agreement_scan(args.dim, args.samples, args.seed)
    result = _scan_payload(report)
    lines = [
        f"{report.mode} scan: dim {report.dim}, {report.sample_count} samples, "
        f"seed {report.seed}",
        f"degree bound d^(-d/2): {annotate(report.bound)}",
    ]
    if report.mode == "degree":
        lines.append(f"max observed degree: {report.max_degree!r}")
        lines.append("histogram counts (50 bins over [0, bound]):")
        counts = list(report.histogram)
        for start in range(0, len(counts), 10):
            lines.append("  " + " ".join(f"{c:6d}" for c in counts[start : start + 10]))
    else:
        lines.append(f"curated edge cases included: {report.curated_count}")
        lines.append(f"agreement rate: {report.agreement_rate!r}")
        lines.append(f"disagreements: {report.disagreement_count}")
        for label, comparison in report.disagreements:
            lines.append(
                f"  {label}: paper={comparison.paper_verdict.classification.value} "
                f"oracle={comparison.oracle_verdict.classification.value}"
            )
    _emit(
        args,
        "scan",
        _fingerprint(
            {"dim": args.dim, "samples": args.samples, "seed": args.seed, "mode": args.mode}
        ),
        {"det_tol": DEFAULT_DET_TOL, "rank_tol": DEFAULT_RANK_TOL},
        result,
        lines,
    )
    return 0


# ---------------------------------------------------------------------------
# parser and entry point


def _add_state_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", metavar="PATH", help="state document (JSON; see schemas/)")
    group.add_argument("--amps", metavar="LIST", help="comma-separated real amplitudes")
    group.add_argument(
        "--theta",
        type=float,
        metavar="T",
        help="shortcut for the 2x2 state cos(T)|00> + sin(T)|11>",
    )
    parser.add_argument(
        "--dims",
        metavar="A,B",
        help="subsystem dims for --amps (default: square, inferred from length)",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="override the default tolerance")
    common.add_argument(
        "--output", choices=("text", "machine"), default="text", help="report format"
    )
    common.add_argument(
        "--normalize",
        action="store_true",
        help="renormalize input amplitudes instead of rejecting non-unit norm",
    )

    parser = argparse.ArgumentParser(
        prog="entdet",
        description="Determinant/trace entanglement rules, checked against the Schmidt decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a bipartite state")
    _add_state_arguments(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("schmidt", parents=[common], help="Schmidt coefficients and rank")
    _add_state_arguments(p)
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("basis", parents=[common], help="inspect an entangled basis state")
    p.add_argument("--family", choices=("bell", "qutrit"), required=True)
    p.add_argument("--index", type=int, required=True, metavar="K")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("algebra", parents=[common], help="verify generator closure")
    p.add_argument("--group", choices=("su2", "su3"), required=True)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("scan", parents=[common], help="statistical scans over random states")
    p.add_argument("--dim", type=int, required=True, help="square subsystem dimension (2 or 3)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("degree", "agreement"), required=True)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ClosureError as exc:
        print(f"closure failure: {exc}", file=sys.stderr)
        if getattr(exc, "residuals", None) is not None:
            labels = exc.labels
            for row_label, row in zip(labels, np.atleast_2d(exc.residuals)):
                cells = " ".join(f"{val:9.2e}" for val in row)
                print(f"  {row_label}: {cells}", file=sys.stderr)
        return 1
    except EntdetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
