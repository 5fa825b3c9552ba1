"""Batch front end: parse flags, run verifications, emit reports.

Exit codes: 0 all bounds hold, 1 a verified property failed, 2 usage error,
3 output could not be written.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from .abelian import CapExceeded, parse_group_spec
from .bundlemodel import (
    DiffeoClass,
    LevelData,
    VerificationReport,
    build_class_report,
    document,
    render_csv,
    render_json,
    render_table,
    verify_level,
)
from .heis import theta_group
from .lattice import DEFAULT_ORACLE_CAP

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_IO = 3

# Test hook: when set, verification runs against a deliberately wrong
# (abelianized) multiplication table, which must drive the exit code to 1.
CORRUPT_ENV_VAR = "THETA_JORDAN_CORRUPT_MUL"

_RENDERERS = {"json": render_json, "csv": render_csv, "table": render_table}


@dataclass(frozen=True)
class RunConfig:
    manifold_class: str = "both"  # "0" | "1" | "both"
    n_max: int = 6
    mode: str = "both"  # oracle | structural | both
    oracle_cap: int = DEFAULT_ORACLE_CAP
    output_format: str = "table"  # json | csv | table
    output_path: str | None = None
    base_group: str | None = None
    seed: int = 0
    no_timestamps: bool = False

    @property
    def parities(self) -> tuple[int, ...]:
        return (0, 1) if self.manifold_class == "both" else (int(self.manifold_class),)


def parse_args(argv=None) -> RunConfig:
    """Parse CLI arguments; unknown flags and bad enums exit with code 2."""
    parser = argparse.ArgumentParser(
        prog="theta-jordan",
        description="Verify abelian-subgroup index bounds for the finite "
                    "theta-group family and emit Jordan-violation reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser(
        "verify", help="run the verification over a range of levels"
    )
    verify.add_argument(
        "--class", dest="manifold_class", choices=["0", "1", "both"],
        default="both", help="bundle diffeomorphism class (level parity)",
    )
    verify.add_argument(
        "--max-n", dest="n_max", type=int, default=6,
        help="largest level to verify (default 6)",
    )
    verify.add_argument(
        "--mode", choices=["oracle", "structural", "both"], default="both",
        help="exhaustive subgroup oracle, closed-form bound, or both",
    )
    verify.add_argument(
        "--oracle-cap", dest="oracle_cap", type=int, default=DEFAULT_ORACLE_CAP,
        help="largest group order the oracle may enumerate (default %(default)s)",
    )
    verify.add_argument(
        "--format", dest="output_format", choices=["json", "csv", "table"],
        default="table", help="report format (default table)",
    )
    verify.add_argument(
        "--out", dest="output_path", default=None,
        help="write the report to this path instead of stdout",
    )
    verify.add_argument(
        "--base-group", dest="base_group", default=None, metavar="SPEC",
        help="verify the single theta group over this base (e.g. Z2xZ2) "
             "instead of the level family; overrides --class and --max-n",
    )
    verify.add_argument(
        "--seed", type=int, default=0,
        help="seed for the randomized group-law spot checks (default 0)",
    )
    verify.add_argument(
        "--no-timestamps", dest="no_timestamps", action="store_true",
        help="omit timestamps and timings for byte-reproducible output",
    )
    ns = parser.parse_args(argv)
    if ns.n_max < 1:
        parser.error(f"--max-n must be >= 1, got {ns.n_max}")
    if ns.oracle_cap < 1:
        parser.error(f"--oracle-cap must be >= 1, got {ns.oracle_cap}")
    return RunConfig(
        manifold_class=ns.manifold_class,
        n_max=ns.n_max,
        mode=ns.mode,
        oracle_cap=ns.oracle_cap,
        output_format=ns.output_format,
        output_path=ns.output_path,
        base_group=ns.base_group,
        seed=ns.seed,
        no_timestamps=ns.no_timestamps,
    )


def _config_echo(config: RunConfig) -> dict:
    return {
        "class": config.manifold_class,
        "max_n": config.n_max,
        "mode": config.mode,
        "oracle_cap": config.oracle_cap,
        "format": config.output_format,
        "out": config.output_path,
        "base_group": config.base_group,
        "seed": config.seed,
        "no_timestamps": config.no_timestamps,
    }


def _base_group_report(config: RunConfig, mul_override):
    """Single-group run for --base-group; the bound target is |K|."""
    base = parse_group_spec(config.base_group)
    cls = DiffeoClass(base.order % 2)
    level = LevelData(
        n=base.order,
        torsion_order=base.order ** 2,
        base=base,
        theta=theta_group(base),
    )
    entry, violations = verify_level(
        level,
        mode=config.mode,
        oracle_cap=config.oracle_cap,
        seed=config.seed,
        mul_override=mul_override,
        with_timing=not config.no_timestamps,
    )
    return VerificationReport(cls, (entry,), ()), violations


def run(config: RunConfig):
    """Execute the configured verification; returns (document, exit code).

    The report is rendered and written (stdout or --out) even when a
    violation was found, so failures stay auditable.
    """
    mul_override = None
    if os.environ.get(CORRUPT_ENV_VAR):
        mul_override = lambda order: (lambda i, j: (i + j) % order)

    violations: list[str] = []
    reports = []
    try:
        if config.base_group:
            report, vio = _base_group_report(config, mul_override)
            reports.append(report)
            violations.extend(vio)
        else:
            for parity in config.parities:
                report, vio = build_class_report(
                    DiffeoClass(parity),
                    config.n_max,
                    mode=config.mode,
                    oracle_cap=config.oracle_cap,
                    seed=config.seed,
                    strict=False,
                    with_timing=not config.no_timestamps,
                    mul_override=mul_override,
                )
                reports.append(report)
                violations.extend(vio)
    except (CapExceeded, ValueError) as exc:
        print(f"theta-jordan: {exc}", file=sys.stderr)
        return {}, EXIT_USAGE

    generated = (
        None
        if config.no_timestamps
        else datetime.now(timezone.utc).isoformat(timespec="seconds")
    )
    doc = document(
        reports,
        _config_echo(config),
        violations,
        with_timing=not config.no_timestamps,
        generated_at=generated,
    )
    text = _RENDERERS[config.output_format](doc)
    try:
        if config.output_path:
            with open(config.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"theta-jordan: cannot write report: {exc}", file=sys.stderr)
        return doc, EXIT_IO
    return doc, EXIT_OK if not violations else EXIT_VIOLATION


def main(argv=None) -> int:
    config = parse_args(argv)
    _, code = run(config)
    return code
