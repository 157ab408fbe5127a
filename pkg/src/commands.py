"""Subcommand implementations for the command-line front end.

Each command writes its result to stdout and returns the process exit code.
Decoding problems surface as InputFormatError and are mapped to exit code 2
by the caller.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

import sympy

from src.algebra.qpoly import LaurentPolynomial, QXPoly
from src.characters.limits import (
    chi_lambda0_truncated,
    chi_via_csf,
    chi_via_csf_stable,
    normalized_limit_truncated,
)
from src.characters.whittaker import modified_macdonald, schur, whittaker
from src.combinatorics.bijections import omega, psi, psi_inverse
from src.combinatorics.clbasis import b_stat
from src.combinatorics.fillings import enumerate_csf, inv, maj, quinv, rowsort, x_exponents
from src.combinatorics.patterns import area, gt_from_ssyt
from src.combinatorics.splice import dsplice_with_trace
from src.core.config import Config
from src.core.data_store import FileDataStore
from src.core.errors import InputFormatError
from src.core.orchestrator import VerificationOrchestrator
from src.lattice.ensemble import build_ensemble, declutter, mark_circles
from src.lattice.render import render
from src.models.filling import Filling
from src.models.patterns import POP
from src.models.shapes import Partition

logger = logging.getLogger(__name__)


# =============================================================================
# I/O helpers
# =============================================================================


def read_json_input(value: str) -> Any:
    """Decode --input: inline JSON, '-' for stdin, or a file path."""
    try:
        if value == "-":
            return json.load(sys.stdin)
        if value.lstrip().startswith(("{", "[")):
            return json.loads(value)
        path = Path(value)
        if not path.exists():
            raise InputFormatError(f"Input file not found: {value}")
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"Invalid JSON input: {e}") from e


def _emit_json(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")


def _emit_text(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def _emit_poly(poly: LaurentPolynomial, fmt: str) -> None:
    if fmt == "json":
        _emit_json({"n": poly.n, "terms": poly.to_json()})
    elif fmt == "latex":
        _emit_text(sympy.latex(poly.to_expr()))
    else:
        _emit_text(poly.format_text())


def _pop_text(P: POP) -> str:
    lines = [f"T = {' / '.join(' '.join(str(v) for v in row) for row in P.gt.rows)}"]
    for (i, j), parts in P.overlay.items():
        lines.append(f"Λ{i}{j} = ({','.join(str(p) for p in parts)})")
    return "\n".join(lines)


def _golden_name(shape: Partition, n: int) -> str:
    parts = "-".join(str(p) for p in shape.parts) or "empty"
    return f"whittaker_{parts}_n{n}"


# =============================================================================
# Commands
# =============================================================================


def cmd_expand(args: argparse.Namespace, config: Config) -> int:
    shape = Partition.parse(args.shape)
    if args.method == "schur":
        poly: LaurentPolynomial = schur(shape, args.n)
    elif args.method == "macdonald":
        poly = modified_macdonald(shape, args.n, args.stat)
    else:
        poly = whittaker(shape, args.n, args.method)
    _emit_poly(poly, args.format)
    return 0


def cmd_bijection(args: argparse.Namespace, config: Config) -> int:
    raw = read_json_input(args.input)
    if args.dir == "inverse":
        result: Filling | POP = psi_inverse(POP.from_json(raw), args.stat)
    elif args.dir == "omega":
        result = omega(Filling.from_json(raw))
    else:
        result = psi(Filling.from_json(raw), args.stat)

    if args.format == "text":
        _emit_text(_pop_text(result) if isinstance(result, POP) else str(result))
    else:
        _emit_json(result.to_json())
    return 0


def cmd_dsplice(args: argparse.Namespace, config: Config) -> int:
    F = Filling.from_json(read_json_input(args.input))
    trace = dsplice_with_trace(F)
    assert trace.result is not None
    if args.trace:
        if args.format == "text":
            for step, state in zip([None, *trace.steps], trace.states):
                prefix = "F†" if step is None else f"S_{step.index}"
                _emit_text(f"{prefix}: {state}")
            _emit_text(f"result: {trace.result}")
        else:
            _emit_json(trace.to_json())
    elif args.format == "text":
        _emit_text(str(trace.result))
    else:
        _emit_json(trace.result.to_json())
    return 0


def cmd_clword(args: argparse.Namespace, config: Config) -> int:
    F = Filling.from_json(read_json_input(args.input))
    stats = ["inv", "quinv"] if args.stat == "both" else [args.stat]
    words = {stat: b_stat(F, stat) for stat in stats}
    if args.format == "json":
        _emit_json({f"b_{stat}": word.to_json() for stat, word in words.items()})
    else:
        for stat, word in words.items():
            _emit_text(f"b_{stat} = {word.format_text()}")
    return 0


def cmd_render(args: argparse.Namespace, config: Config) -> int:
    F = Filling.from_json(read_json_input(args.input))
    E = declutter(build_ensemble(F))
    circles = mark_circles(E) if args.circles else None
    data = render(
        E,
        fmt=args.format,
        circles=circles,
        tile_size=config.render.tile_size,
        palette=config.render.palette or None,
        stroke_width=config.render.stroke_width,
    )
    if args.out:
        Path(args.out).write_bytes(data)
        logger.info(f"Wrote {args.format} diagram to {args.out}")
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0


def cmd_limit(args: argparse.Namespace, config: Config) -> int:
    """Both sides of the vacuum character identity, plus the Whittaker-side limit."""
    shape = Partition.parse(args.shape)
    degree = config.limits.qmax if args.qmax is None else args.qmax
    if args.kmax is None:
        csf_side, K = chi_via_csf_stable(shape, args.n, degree, config.limits.patience, config.limits.kmax_cap)
    else:
        K = args.kmax
        csf_side = chi_via_csf(shape, args.n, K, degree)
    theta_side = chi_lambda0_truncated(args.n, degree) if shape.size == 0 else None
    whittaker_side = normalized_limit_truncated(shape, args.n, K, degree)
    diff = csf_side - theta_side if theta_side is not None else None

    if args.format == "json":
        _emit_json({
            "shape": shape.to_json(),
            "n": args.n,
            "qmax": degree,
            "K": K,
            "theta": theta_side.to_json() if theta_side is not None else None,
            "csf": csf_side.to_json(),
            "whittaker": whittaker_side.to_json(),
            "diff": diff.to_json() if diff is not None else None,
        })
    else:
        keys = sorted(
            set(csf_side.terms) | set(whittaker_side.terms) | set(theta_side.terms if theta_side else {})
        )
        _emit_text(f"λ={shape} n={args.n} D={degree} K={K}")
        _emit_text(f"{'term':<24}{'theta':>8}{'csf':>8}{'whittaker':>11}")
        for key in keys:
            label = QXPoly({key: 1}, args.n).format_text()
            theta_c = str(theta_side.terms.get(key, 0)) if theta_side is not None else "-"
            _emit_text(
                f"{label:<24}{theta_c:>8}{csf_side.terms.get(key, 0):>8}{whittaker_side.terms.get(key, 0):>11}"
            )
        _emit_text(f"diff (csf - theta): {diff.format_text() if diff is not None else 'n/a'}")

    return 1 if diff is not None and not diff.is_zero() else 0


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    orchestrator = VerificationOrchestrator(
        config, max_cells=args.max_cells, max_n=args.max_n, qmax=args.qmax
    )
    reports = orchestrator.run(args.suite)
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        _emit_text(f"{report.suite}: {status} ({report.cases_checked} cases, {report.elapsed_ms:.0f} ms)")
        if report.counterexample is not None:
            sys.stderr.write(json.dumps(report.counterexample.to_json(), ensure_ascii=False) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_golden(args: argparse.Namespace, config: Config) -> int:
    shape = Partition.parse(args.shape)
    store = FileDataStore(config.data_store.path)
    name = _golden_name(shape, args.n)
    poly = whittaker(shape, args.n, "fermionic")
    if not args.check:
        path = store.write_golden(name, poly)
        _emit_text(str(path))
        return 0

    stored = store.read_golden(name)
    if stored is None:
        sys.stderr.write(json.dumps({"golden": name, "error": "missing"}) + "\n")
        return 1
    if stored != poly:
        sys.stderr.write(
            json.dumps({"golden": name, "expected": stored.to_json(), "got": poly.to_json()}) + "\n"
        )
        return 1
    _emit_text(f"{name}: OK")
    return 0


def statistics_rows(shape: Partition, n: int) -> list[dict[str, Any]]:
    """One row per CSF of (λ, n)."""
    rows = []
    for F in enumerate_csf(shape, n):
        sorted_F = rowsort(F)
        rows.append({
            "rows": json.dumps([list(r) for r in F.rows()]),
            "x_weight": list(x_exponents(F)),
            "inv": inv(F),
            "quinv": quinv(F),
            "maj": maj(F),
            "area": area(gt_from_ssyt(sorted_F)),
            "rowsort": json.dumps([list(r) for r in sorted_F.rows()]),
        })
    return rows


def cmd_tabulate(args: argparse.Namespace, config: Config) -> int:
    shape = Partition.parse(args.shape)
    rows = statistics_rows(shape, args.n)
    store = FileDataStore(config.data_store.path)
    path = store.write_statistics_table(_golden_name(shape, args.n).replace("whittaker", "statistics"), rows, args.out)
    _emit_text(f"{len(rows)} rows -> {path}")
    return 0


COMMANDS = {
    "expand": cmd_expand,
    "bijection": cmd_bijection,
    "dsplice": cmd_dsplice,
    "clword": cmd_clword,
    "render": cmd_render,
    "limit": cmd_limit,
    "verify": cmd_verify,
    "golden": cmd_golden,
    "tabulate": cmd_tabulate,
}
