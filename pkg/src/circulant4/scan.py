"""Point checks, grid scans and deterministic reports.

A check evaluates a named criterion at one point of a manifold:

    validity     the point is in the valid domain (loci avoided, ordering)
    parallel     nabla q and the reduced gradient conditions vanish
    curvature31  the (0,4) curvature absorbs q across its last two slots
    curvature32  the endomorphisms R(x, y) commute with q

The two curvature residuals are compared against tol scaled by 1 + the
largest curvature component. Checks other than validity are skipped (null
in the report) at invalid points.

Reports are plain mappings rendered to JSON or CSV. Rendering is
deterministic: fixed key order, records in row-major grid order, floats in
shortest round-trip form, so identical inputs give byte-identical output
regardless of how many worker processes evaluated the grid.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from csv import writer as csv_writer
from dataclasses import dataclass, field
from functools import partial
from io import StringIO

import numpy as np

from .circulant import SingularMetricError
from .connection import DomainError, parallelism_verdict
from .curvature import (
    _q_commutation_gap,
    _q_invariance_gap,
    riemann,
    riemann_lowered,
)
from .fields import as_point
from .manifolds import ManifoldSpec

__all__ = [
    "CHECKS",
    "AxisSpec",
    "ScanConfig",
    "Report",
    "evaluate_point",
    "run_check",
    "run_scan",
    "render_report",
]

CHECKS = ("validity", "parallel", "curvature31", "curvature32")

_VERSION = "0.1.0"


@dataclass(frozen=True)
class AxisSpec:
    """One grid axis: count values evenly spaced over [start, stop]."""

    start: float
    stop: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("axis bounds must be finite")
        if self.start > self.stop:
            raise ValueError(f"axis start {self.start} exceeds stop {self.stop}")
        if not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"axis count must be a positive integer, got {self.count!r}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class ScanConfig:
    """A four-axis grid, the checks to run on it and the tolerance."""

    axes: tuple[AxisSpec, AxisSpec, AxisSpec, AxisSpec]
    checks: tuple[str, ...] = CHECKS
    tolerance: float = 1e-8

    def __post_init__(self):
        if len(self.axes) != 4 or not all(isinstance(a, AxisSpec) for a in self.axes):
            raise ValueError("exactly four AxisSpec axes are required")
        unknown = sorted(set(self.checks) - set(CHECKS))
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if not self.checks:
            raise ValueError("at least one check is required")
        # normalize to canonical order so equivalent configs report identically
        object.__setattr__(
            self, "checks", tuple(c for c in CHECKS if c in self.checks)
        )
        if not (math.isfinite(self.tolerance) and self.tolerance > 0):
            raise ValueError("tolerance must be positive and finite")

    def points(self):
        """Grid points in row-major order (last axis fastest)."""
        for coords in itertools.product(*(axis.values() for axis in self.axes)):
            yield np.array(coords)


def _parallel_outcome(m: ManifoldSpec, p, tol: float) -> dict:
    verdict, report = parallelism_verdict(m, p, tol)
    nq_max = report["max |nabla q|"]
    gradient_max = max(v for k, v in report.entries if k != "max |nabla q|")
    return {
        "passed": verdict,
        "nabla_q_max": nq_max,
        "gradient_condition_max": gradient_max,
    }


def _curvature31_outcome(m: ManifoldSpec, p, tol: float) -> dict:
    r4 = riemann_lowered(m, p)
    scale = 1.0 + float(np.max(np.abs(r4)))
    residual = _q_invariance_gap(r4)
    return {"passed": residual <= tol * scale, "residual": residual, "scale": scale}


def _curvature32_outcome(m: ManifoldSpec, p, tol: float) -> dict:
    r13 = riemann(m, p)
    scale = 1.0 + float(np.max(np.abs(r13)))
    residual = _q_commutation_gap(r13)
    return {"passed": residual <= tol * scale, "residual": residual, "scale": scale}


_GEOMETRY_CHECKS = {
    "parallel": _parallel_outcome,
    "curvature31": _curvature31_outcome,
    "curvature32": _curvature32_outcome,
}


def evaluate_point(
    manifold: ManifoldSpec, point, checks=CHECKS, tolerance: float = 1e-8
) -> dict:
    """One record of the report: triple, validity and check outcomes at point."""
    p = as_point(point)
    status = manifold.domain_valid(p)
    t = manifold.triple_at(p)
    record = {
        "point": [float(x) for x in p],
        "triple": {"A": t.a, "B": t.b, "C": t.c},
        "valid": status.valid,
        "reason": status.reason,
        "checks": {},
    }
    for check in checks:
        if check == "validity":
            record["checks"]["validity"] = {"passed": status.valid}
        elif not status.valid:
            record["checks"][check] = None
        else:
            try:
                record["checks"][check] = _GEOMETRY_CHECKS[check](
                    manifold, p, tolerance
                )
            except (DomainError, SingularMetricError) as exc:
                record["checks"][check] = {"passed": False, "error": str(exc)}
    return record


def _record_residual(check: str, outcome: dict) -> float | None:
    if outcome is None or "error" in outcome:
        return None
    if check == "parallel":
        return max(outcome["nabla_q_max"], outcome["gradient_condition_max"])
    if check in ("curvature31", "curvature32"):
        return outcome["residual"]
    return None


def _summarize(records: list[dict], checks) -> dict:
    total = len(records)
    valid = sum(1 for r in records if r["valid"])
    per_check = {}
    all_passed = True
    for check in checks:
        if check == "validity":
            per_check["validity"] = {"passed": valid, "failed": total - valid}
            if valid != total:
                all_passed = False
            continue
        passed = failed = skipped = 0
        max_residual = None
        for record in records:
            outcome = record["checks"][check]
            if outcome is None:
                skipped += 1
                continue
            if outcome["passed"]:
                passed += 1
            else:
                failed += 1
            residual = _record_residual(check, outcome)
            if residual is not None and (max_residual is None or residual > max_residual):
                max_residual = residual
        per_check[check] = {
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
            "max_residual": max_residual,
        }
        if failed:
            all_passed = False
    return {
        "points": total,
        "valid_points": valid,
        "checks": per_check,
        "all_passed": all_passed,
    }


@dataclass(frozen=True)
class Report:
    meta: dict = field(default_factory=dict)
    points: tuple = ()
    summary: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return bool(self.summary.get("all_passed", False))

    def to_mapping(self) -> dict:
        return {"meta": self.meta, "points": list(self.points), "summary": self.summary}


def _meta(manifold: ManifoldSpec, kind: str, checks, tolerance: float) -> dict:
    return {
        "generator": "circulant4",
        "version": _VERSION,
        "kind": kind,
        "manifold": manifold.name,
        "checks": list(checks),
        "tolerance": tolerance,
    }


def run_check(
    manifold: ManifoldSpec, point, checks=CHECKS, tolerance: float = 1e-8
) -> Report:
    """Evaluate the checks at a single point and wrap them as a report."""
    checks = tuple(c for c in CHECKS if c in checks)
    if not checks:
        raise ValueError("at least one check is required")
    if not (math.isfinite(tolerance) and tolerance > 0):
        raise ValueError("tolerance must be positive and finite")
    record = evaluate_point(manifold, point, checks, tolerance)
    meta = _meta(manifold, "check", checks, tolerance)
    meta["point"] = record["point"]
    return Report(meta, (record,), _summarize([record], checks))


def run_scan(manifold: ManifoldSpec, config: ScanConfig, jobs: int = 1) -> Report:
    """Evaluate the configured checks over the whole grid.

    jobs > 1 spreads the points over worker processes; record order and
    therefore the rendered report stay identical either way.
    """
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f"jobs must be a positive integer, got {jobs!r}")
    points = list(config.points())
    worker = partial(
        evaluate_point, manifold, checks=config.checks, tolerance=config.tolerance
    )
    if jobs > 1 and len(points) > 1:
        chunk = max(1, len(points) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(worker, points, chunksize=chunk))
    else:
        records = [worker(p) for p in points]
    meta = _meta(manifold, "scan", config.checks, config.tolerance)
    meta["box"] = [
        {"start": a.start, "stop": a.stop, "count": a.count} for a in config.axes
    ]
    return Report(meta, tuple(records), _summarize(records, config.checks))


_CSV_COLUMNS = (
    "x1", "x2", "x3", "x4", "A", "B", "C", "valid", "reason",
    "parallel_passed", "parallel_max_residual",
    "curvature31_passed", "curvature31_residual",
    "curvature32_passed", "curvature32_residual",
)


def _csv_bool(value) -> str:
    return "true" if value else "false"


def _csv_cells(record: dict) -> list[str]:
    cells = [repr(x) for x in record["point"]]
    cells += [repr(record["triple"][k]) for k in ("A", "B", "C")]
    cells.append(_csv_bool(record["valid"]))
    cells.append(record["reason"] or "")
    for check in ("parallel", "curvature31", "curvature32"):
        outcome = record["checks"].get(check)
        if outcome is None:
            cells += ["", ""]
            continue
        cells.append(_csv_bool(outcome["passed"]))
        residual = _record_residual(check, outcome)
        cells.append("" if residual is None else repr(residual))
    return cells


def render_report(report: Report, fmt: str = "json") -> str:
    """Serialize a report; json round-trips exactly, csv is one row per point."""
    if fmt == "json":
        return json.dumps(report.to_mapping(), indent=2) + "\n"
    if fmt == "csv":
        buffer = StringIO()
        table = csv_writer(buffer, lineterminator="\n")
        table.writerow(_CSV_COLUMNS)
        for record in report.points:
            table.writerow(_csv_cells(record))
        return buffer.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
