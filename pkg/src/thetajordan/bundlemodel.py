"""Level family, parity classes, verification reports and certificates.

Level n carries a cyclic base group of order n (so the pairing space is the
n-torsion (Z_n)^2 of the 2-torus) and the theta group of order n^3.  Total
spaces of orientable S2-bundles over the torus fall into two diffeomorphism
classes by the parity of the level, so reports attach every level to its
parity class.  A verification entry checks that the minimal abelian index
of the level-n theta group is at least n; a threshold certificate names the
smallest level of a class whose index beats a candidate bound c, refuting c
as a Jordan constant for that class.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from time import perf_counter
from typing import Callable

from .abelian import CapExceeded, Coords, FiniteAbelianGroup, make_group
from .heis import ThetaGroup, theta_group
from .lattice import ConcreteGroup, DEFAULT_ORACLE_CAP, max_abelian_order
from .symplectic import structural_min_abelian_index

SCHEMA_VERSION = "theta-jordan/1"
DEFAULT_THRESHOLDS = (1, 5, 10, 1_000_000)
DEFAULT_SWEEP_ROUNDS = 24

# The level-k symmetry group is pinned to the full k-torsion of the torus,
# the smallest model compatible with the construction; reports carry this
# note because other models can only be larger.
MODEL_NOTE = (
    "level-k symmetry group modeled as the full k-torsion (Z_k)^2 of the "
    "torus, so its order is exactly k^2"
)

_CLASS_DESCRIPTIONS = {
    0: "T2 x S2 (trivial orientable S2-bundle over T2)",
    1: "twisted orientable S2-bundle over T2",
}


class BoundViolation(RuntimeError):
    """A computed entry breaks the index bound, or the two methods disagree."""


@dataclass(frozen=True)
class DiffeoClass:
    """Diffeomorphism class of the bundle total space: the level parity."""

    parity: int

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity {self.parity} is not 0 or 1")

    @property
    def description(self) -> str:
        return _CLASS_DESCRIPTIONS[self.parity]


def diffeo_class(n: int) -> DiffeoClass:
    """Class of the level-n total space; levels are taken nonnegative."""
    if n < 0:
        raise ValueError(f"level {n} is negative")
    return DiffeoClass(n % 2)


def torsion_group(k: int) -> FiniteAbelianGroup:
    """The k-torsion subgroup of the 2-torus: Z_k + Z_k, order k^2."""
    if k < 1:
        raise ValueError(f"torsion level {k} must be >= 1")
    return make_group([k, k])


def torsion_inclusion(d: int, k: int) -> Callable[[Coords], Coords]:
    """Coordinate embedding of the d-torsion into the k-torsion (d | k).

    Scales each coordinate by k/d; the image is exactly the d-torsion part
    of the larger group.
    """
    if d < 1 or k < 1 or k % d:
        raise ValueError(f"{d} does not divide {k}")
    scale = k // d
    src = torsion_group(d)
    dst = torsion_group(k)

    def embed(x: Coords) -> Coords:
        src.check_element(x)
        return tuple(c * scale for c in x) if x else dst.zero()

    return embed


@dataclass(frozen=True)
class LevelData:
    """One member of the family: level n, its base group and theta group."""

    n: int
    torsion_order: int
    base: FiniteAbelianGroup
    theta: ThetaGroup


def level_data(n: int) -> LevelData:
    """Level n: cyclic base of order n, theta group of order n^3."""
    if n < 1:
        raise ValueError(f"level {n} must be >= 1")
    base = make_group([n])
    return LevelData(n=n, torsion_order=n * n, base=base, theta=theta_group(base))


def family_for_class(cls: DiffeoClass, n_max: int) -> list[LevelData]:
    """All levels 1..n_max of the given parity, ascending."""
    if n_max < 1:
        raise ValueError(f"n_max {n_max} must be >= 1")
    return [level_data(n) for n in range(1, n_max + 1) if n % 2 == cls.parity]


@dataclass(frozen=True)
class ReportEntry:
    n: int
    group_order: int
    max_abelian_order: int
    min_abelian_index: int
    method: str  # oracle | structural | both
    elapsed_s: float | None


@dataclass(frozen=True)
class Certificate:
    """Evidence that the threshold is not a Jordan constant for the class."""

    threshold: int
    n: int
    group_order: int
    min_abelian_index: int
    method: str


@dataclass(frozen=True)
class VerificationReport:
    manifold_class: DiffeoClass
    entries: tuple[ReportEntry, ...]
    threshold_certificates: tuple[Certificate, ...]


def _concrete_for(theta: ThetaGroup, mul_override, cap: int) -> ConcreteGroup:
    if mul_override is None:
        return theta.to_concrete(cap)
    # test hook: replaces the group law on indices outright
    return ConcreteGroup.from_mul_fn(theta.order, mul_override(theta.order))


def _index_evidence(level: LevelData, mode: str, oracle_cap: int,
                    mul_override=None, fallback: bool = False):
    """(max_abelian_order, min_index, method, disagreement-or-None).

    mode 'oracle' runs the exhaustive subgroup search (CapExceeded above the
    cap unless fallback is allowed), 'structural' uses the closed form, and
    'both' runs both where the oracle fits and records any disagreement.
    """
    if mode not in ("oracle", "structural", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    theta = level.theta
    structural_idx = structural_min_abelian_index(theta.base)
    structural_max = theta.base.order ** 2
    can_oracle = theta.order <= oracle_cap
    if mode == "oracle" and not can_oracle and not fallback:
        raise CapExceeded(
            f"level {level.n}: theta group order {theta.order} exceeds the "
            f"oracle cap {oracle_cap}; use mode 'structural'"
        )
    if mode != "structural" and can_oracle:
        concrete = _concrete_for(theta, mul_override, oracle_cap)
        omax = max_abelian_order(concrete, oracle_cap)
        oidx = theta.order // omax
        if mode == "oracle":
            return omax, oidx, "oracle", None
        disagreement = None
        if (omax, oidx) != (structural_max, structural_idx):
            disagreement = (
                f"level {level.n}: oracle max abelian order {omax} (index "
                f"{oidx}) disagrees with structural {structural_max} "
                f"(index {structural_idx})"
            )
        return omax, oidx, "both", disagreement
    return structural_max, structural_idx, "structural", None


def _sanity_sweep(theta: ThetaGroup, rng: random.Random,
                  rounds: int = DEFAULT_SWEEP_ROUNDS) -> list[str]:
    """Seeded random group-law spot checks; returns violation strings.

    Works at any level because it never enumerates the group: associativity
    on random triples, inverse law, and the commutator closed-form bridge.
    """
    out = []
    e = theta.identity()
    for _ in range(rounds):
        g = theta.random_element(rng)
        h = theta.random_element(rng)
        f = theta.random_element(rng)
        if theta.mul(theta.mul(g, h), f) != theta.mul(g, theta.mul(h, f)):
            out.append(f"associativity failed at {g}, {h}, {f}")
        if theta.mul(g, theta.inv(g)) != e:
            out.append(f"inverse law failed at {g}")
        try:
            theta.commutator(g, h)
        except RuntimeError as exc:
            out.append(str(exc))
    return out


def verify_level(level: LevelData, mode: str = "both",
                 oracle_cap: int = DEFAULT_ORACLE_CAP, seed: int = 0,
                 sweep_rounds: int = DEFAULT_SWEEP_ROUNDS,
                 mul_override=None, with_timing: bool = True):
    """Verify one level; returns (ReportEntry, violation strings)."""
    start = perf_counter()
    rng = random.Random(seed * 1_000_003 + level.n)
    violations = _sanity_sweep(level.theta, rng, sweep_rounds)
    maxab, idx, method, disagreement = _index_evidence(
        level, mode, oracle_cap, mul_override
    )
    if disagreement:
        violations.append(disagreement)
    if idx < level.n:
        violations.append(
            f"level {level.n}: min abelian index {idx} is below the bound "
            f"{level.n} ({method})"
        )
    elapsed = round(perf_counter() - start, 6) if with_timing else None
    entry = ReportEntry(
        n=level.n,
        group_order=level.theta.order,
        max_abelian_order=maxab,
        min_abelian_index=idx,
        method=method,
        elapsed_s=elapsed,
    )
    return entry, violations


def jordan_certificate(cls: DiffeoClass, threshold: int, mode: str = "both",
                       oracle_cap: int = DEFAULT_ORACLE_CAP,
                       mul_override=None) -> Certificate:
    """Smallest level of the class above the threshold, with index evidence.

    The oracle supplies the evidence when the group fits under the cap and
    the closed form otherwise, so every threshold is answerable.  Raises
    BoundViolation if the evidence fails to beat the threshold.
    """
    if threshold < 1:
        raise ValueError(f"threshold {threshold} must be >= 1")
    n = threshold + 1
    if n % 2 != cls.parity:
        n += 1
    level = level_data(n)
    _, idx, method, disagreement = _index_evidence(
        level, mode, oracle_cap, mul_override, fallback=True
    )
    if disagreement:
        raise BoundViolation(disagreement)
    if not (idx >= level.n > threshold):
        raise BoundViolation(
            f"certificate failed: index {idx} at level {n} does not exceed "
            f"threshold {threshold}"
        )
    return Certificate(
        threshold=threshold,
        n=n,
        group_order=level.theta.order,
        min_abelian_index=idx,
        method=method,
    )


def build_class_report(cls: DiffeoClass, n_max: int, mode: str = "both",
                       oracle_cap: int = DEFAULT_ORACLE_CAP,
                       thresholds=DEFAULT_THRESHOLDS, seed: int = 0,
                       sweep_rounds: int = DEFAULT_SWEEP_ROUNDS,
                       strict: bool = True, with_timing: bool = True,
                       mul_override=None):
    """Report for one parity class; returns (VerificationReport, violations).

    With strict=True (library default) any violation aborts with a
    BoundViolation diagnostic; callers that need to emit the failing report
    first pass strict=False and handle the violation list themselves.
    """
    entries = []
    violations: list[str] = []
    for level in family_for_class(cls, n_max):
        entry, vio = verify_level(
            level, mode, oracle_cap, seed, sweep_rounds, mul_override, with_timing
        )
        entries.append(entry)
        violations.extend(vio)
    certificates = []
    for c in thresholds:
        try:
            certificates.append(
                jordan_certificate(cls, c, mode, oracle_cap, mul_override)
            )
        except BoundViolation as exc:
            violations.append(str(exc))
    report = VerificationReport(cls, tuple(entries), tuple(certificates))
    if strict and violations:
        raise BoundViolation("; ".join(violations))
    return report, violations


# --- serialization -------------------------------------------------------

def report_to_dict(report: VerificationReport, with_timing: bool = True) -> dict:
    entries = []
    for e in report.entries:
        row = {
            "n": e.n,
            "group_order": e.group_order,
            "max_abelian_order": e.max_abelian_order,
            "min_abelian_index": e.min_abelian_index,
            "method": e.method,
        }
        if with_timing and e.elapsed_s is not None:
            row["elapsed_s"] = e.elapsed_s
        entries.append(row)
    certificates = [
        {
            "threshold": c.threshold,
            "n": c.n,
            "group_order": c.group_order,
            "min_abelian_index": c.min_abelian_index,
            "method": c.method,
        }
        for c in report.threshold_certificates
    ]
    return {
        "manifold_class": report.manifold_class.parity,
        "manifold": report.manifold_class.description,
        "entries": entries,
        "threshold_certificates": certificates,
    }


def document(reports, config_echo: dict, violations, with_timing: bool = True,
             generated_at: str | None = None) -> dict:
    """Assemble the versioned report document all renderers consume."""
    doc = {
        "schema": SCHEMA_VERSION,
        "ok": not violations,
        "model_note": MODEL_NOTE,
        "config": dict(config_echo),
        "reports": [report_to_dict(r, with_timing) for r in reports],
        "violations": list(violations),
    }
    if generated_at is not None:
        doc["generated_at"] = generated_at
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_csv(doc: dict) -> str:
    """One verification entry per row, across all classes in the document."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["class", "n", "group_order", "max_abelian_order",
         "min_abelian_index", "method", "elapsed_s"]
    )
    for report in doc["reports"]:
        for e in report["entries"]:
            writer.writerow(
                [report["manifold_class"], e["n"], e["group_order"],
                 e["max_abelian_order"], e["min_abelian_index"], e["method"],
                 e.get("elapsed_s", "")]
            )
    return buf.getvalue()


def _aligned(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]


def render_table(doc: dict) -> str:
    lines = [f"{doc['schema']}  (abelian-index verification)"]
    if "generated_at" in doc:
        lines.append(f"generated at {doc['generated_at']}")
    for report in doc["reports"]:
        lines.append("")
        lines.append(
            f"class {report['manifold_class']}: {report['manifold']}"
        )
        rows = [["n", "|G|", "max abelian", "min index", "method", "elapsed"]]
        for e in report["entries"]:
            rows.append(
                [str(e["n"]), str(e["group_order"]),
                 str(e["max_abelian_order"]), str(e["min_abelian_index"]),
                 e["method"], str(e.get("elapsed_s", "-"))]
            )
        lines.extend(_aligned(rows))
        if len(rows) == 1:
            lines.append("  (no levels in range)")
        for c in report["threshold_certificates"]:
            lines.append(
                f"  threshold {c['threshold']} refuted by n={c['n']}: "
                f"min abelian index {c['min_abelian_index']} ({c['method']})"
            )
    if doc["violations"]:
        lines.append("")
        lines.append("VIOLATIONS:")
        lines.extend(f"  {v}" for v in doc["violations"])
    lines.append("")
    lines.append("result: " + ("OK" if doc["ok"] else "FAILED"))
    return "\n".join(lines) + "\n"
