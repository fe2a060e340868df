"""Command-line entry point: fit bands, verify the operator algebra,
emit report tables and plot-ready data.

Exit codes: 0 success, 1 validation or regime failure, 2 usage error.
All diagnostics go to standard error; results go to standard output or
the ``-o`` path, byte-identically for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .bp_space import (
    build_space,
    check_angle_completeness,
    check_angle_cycling,
    check_angle_orthonormality,
    check_cyclic_shift,
    check_lowering,
    check_quantum_plane,
    check_shift_power,
    check_unitarity,
)
from .fit import fit_A
from .ingest import emit_plot_data, read_band_file, write_report
from .model import BandError, q_parameter_from_band
from .qnum import QParameter, RegimeError
from .suq2 import build_irrep, check_casimir, check_commutators

__all__ = ["CliConfig", "main", "cmd_fit", "cmd_verify", "cmd_table", "cmd_plotdata"]

DEFAULT_MAX_DIM = 201
VERIFY_SPINS = (0.5, 1.0, 2.0, 5.0, 10.0)


@dataclass
class CliConfig:
    subcommand: str
    inputs: list[Path] = field(default_factory=list)
    max_dim: int = DEFAULT_MAX_DIM
    tolerance: float | None = None
    output: Path | None = None
    classical_only: bool = False
    as_json: bool = False


def _odd_dim(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension {text!r}") from None
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"max dimension must be odd and >= 3, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrotor",
        description="Deformed-rotor fits of nuclear rotational bands with the "
        "deformation fixed by each band's spin content.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_output(p):
        p.add_argument("-o", "--output", type=Path, default=None, help="write results to this file")

    p_fit = sub.add_parser("fit", help="fit A for each band file and print the report")
    p_fit.add_argument("inputs", nargs="+", type=Path, help="band files")
    p_fit.add_argument("--json", action="store_true", help="emit the JSON report with residuals")
    p_fit.add_argument("--classical-only", action="store_true", help="fit only the j(j+1) baseline")
    add_output(p_fit)

    p_table = sub.add_parser("table", help="fit band files or directories and write the table")
    p_table.add_argument("inputs", nargs="+", type=Path, help="band files or directories of *.band")
    p_table.add_argument("--json", action="store_true", help="emit the JSON report with residuals")
    p_table.add_argument("--classical-only", action="store_true", help="fit only the j(j+1) baseline")
    add_output(p_table)

    p_plot = sub.add_parser("plotdata", help="emit 6-column level/residual data per band")
    p_plot.add_argument("inputs", nargs="+", type=Path, help="band files")
    add_output(p_plot)

    p_verify = sub.add_parser("verify", help="verify the operator-algebra identities numerically")
    p_verify.add_argument("--max-dim", type=_odd_dim, default=DEFAULT_MAX_DIM,
                          help="largest space dimension in the sweep (odd, default 201)")
    p_verify.add_argument("--tolerance", type=float, default=None,
                          help="override the per-check tolerances with one value")
    add_output(p_verify)

    return parser


def _emit(config: CliConfig, payload: bytes) -> None:
    if config.output is not None:
        config.output.write_bytes(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
        sys.stdout.flush()


def _fit_one(path: Path, classical_only: bool):
    band_file = read_band_file(path)
    band = band_file.parsed
    fit_cl = fit_A(band, None)
    fit_q = None if classical_only else fit_A(band, q_parameter_from_band(band))
    return band, fit_q, fit_cl


def _run_fits(config: CliConfig, paths: list[Path]) -> int:
    results = []
    failed = False
    for path in paths:
        try:
            results.append(_fit_one(path, config.classical_only))
        except (BandError, RegimeError, ValueError) as exc:
            print(f"qrotor: {path}: {exc}", file=sys.stderr)
            failed = True
    if results:
        _emit(config, write_report(results, as_json=config.as_json))
    return 1 if failed else 0


def cmd_fit(config: CliConfig) -> int:
    return _run_fits(config, config.inputs)


def cmd_table(config: CliConfig) -> int:
    paths: list[Path] = []
    for item in config.inputs:
        if item.is_dir():
            paths.extend(sorted(item.glob("*.band")))
        else:
            paths.append(item)
    if not paths:
        print("qrotor: no band files found", file=sys.stderr)
        return 1
    return _run_fits(config, paths)


def cmd_plotdata(config: CliConfig) -> int:
    blocks = []
    failed = False
    for path in config.inputs:
        try:
            band, fit_q, fit_cl = _fit_one(path, classical_only=False)
            blocks.append(emit_plot_data(band, fit_q, fit_cl))
        except (BandError, RegimeError, ValueError) as exc:
            print(f"qrotor: {path}: {exc}", file=sys.stderr)
            failed = True
    if blocks:
        _emit(config, b"\n".join(blocks))
    return 1 if failed else 0


BP_CHECKS = (
    ("quantum-plane", check_quantum_plane),
    ("cyclic-shift", check_cyclic_shift),
    ("unitarity", check_unitarity),
    ("angle-orthonormality", check_angle_orthonormality),
    ("angle-completeness", check_angle_completeness),
    ("angle-cycling", check_angle_cycling),
    ("lowering", check_lowering),
)

IRREP_CHECKS = (
    ("commutators", check_commutators),
    ("casimir", check_casimir),
)


def _bp_tolerance(dim: int) -> float:
    return 1e-12 if dim <= 201 else 1e-10


def _irrep_tolerance(dim: int) -> float:
    return 1e-12 if dim <= 201 else 1e-11


def cmd_verify(config: CliConfig) -> int:
    l_sweep = sorted({1, 2, 5, 25, (config.max_dim - 1) // 2})
    lines = []
    failures = []

    def record(name: str, params: str, deviation: float, tol: float) -> None:
        status = "PASS" if deviation <= tol else "FAIL"
        lines.append(f"{name:<22} {params:<24} dev={deviation:.3e} tol={tol:.0e} {status}")
        if status == "FAIL":
            failures.append(f"{name} {params}: deviation {deviation:.3e} exceeds {tol:.0e}")

    for l in l_sweep:
        for theta0 in (0.0, 0.6):
            space = build_space(l, theta0, max_dim=config.max_dim)
            tol = config.tolerance if config.tolerance is not None else _bp_tolerance(space.dim)
            params = f"l={l} theta0={theta0:.1f}"
            for name, check in BP_CHECKS:
                record(name, params, check(space), tol)
            if space.dim <= 101:
                power_tol = config.tolerance if config.tolerance is not None else 1e-10
                record("shift-power", params, check_shift_power(space), power_tol)

    for l in l_sweep:
        dim = 2 * l + 1
        qp = QParameter.from_dim(dim)
        for j in VERIFY_SPINS:
            params = f"dim={dim} j={j:g}"
            try:
                irrep = build_irrep(j, qp)
            except RegimeError:
                lines.append(f"{'irrep':<22} {params:<24} skipped (space too small for spin)")
                continue
            tol = config.tolerance if config.tolerance is not None else _irrep_tolerance(dim)
            for name, check in IRREP_CHECKS:
                record(name, params, check(irrep), tol)

    _emit(config, ("\n".join(lines) + "\n").encode("utf-8"))
    for failure in failures:
        print(f"qrotor: verify: {failure}", file=sys.stderr)
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CliConfig(
        subcommand=args.subcommand,
        inputs=list(getattr(args, "inputs", []) or []),
        max_dim=getattr(args, "max_dim", DEFAULT_MAX_DIM),
        tolerance=getattr(args, "tolerance", None),
        output=args.output,
        classical_only=getattr(args, "classical_only", False),
        as_json=getattr(args, "json", False),
    )
    handler = {
        "fit": cmd_fit,
        "table": cmd_table,
        "plotdata": cmd_plotdata,
        "verify": cmd_verify,
    }[config.subcommand]
    return handler(config)


if __name__ == "__main__":
    sys.exit(main())
