"""Manifold descriptions: three scalar fields plus domain bookkeeping.

A manifold here is R^4 (minus excluded loci) carrying the circulant metric
whose components at p are (A(p), B(p), C(p)). Validity of a point means it
avoids the excluded loci and the triple is ordered A > C > B > 0, which is
sufficient for positive definiteness.

The built-in example uses

    A = x1^2 + x2^2 + x3^2 + x4^2
    B = x1*x2 + x2*x3 + x1*x4 + x3*x4
    C = 2*x1*x3 + 2*x2*x4

with the lines (x, x, x, x) and (-x, x, -x, x) excluded; on those lines
A - C = (x1 - x3)^2 + (x2 - x4)^2 collapses to zero and the metric
degenerates. User manifolds come from a small line-oriented config format:

    # comment
    name = my manifold
    A = x1^2 + 1
    B = 1/2 * x1 * x2
    C = x3

Keys are name, A, B, C; the three field expressions are required.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .circulant import CirculantTriple, metric_components
from .fields import ParseError, ScalarField, as_point, parse_field

__all__ = [
    "SignLineLocus",
    "DomainStatus",
    "ManifoldSpec",
    "ConfigError",
    "example_manifold",
    "constant_manifold",
    "manifold_from_config",
    "load_manifold",
]


@dataclass(frozen=True)
class SignLineLocus:
    """The punctured line p = (s1*x, s2*x, s3*x, s4*x) for signs s_i = +-1."""

    label: str
    signs: tuple[int, int, int, int]

    def contains(self, p) -> bool:
        p = as_point(p)
        v = [s * x for s, x in zip(self.signs, p)]
        return v[0] == v[1] == v[2] == v[3]


@dataclass(frozen=True)
class DomainStatus:
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class ManifoldSpec:
    name: str
    A: ScalarField
    B: ScalarField
    C: ScalarField
    excluded_loci: tuple[SignLineLocus, ...] = field(default=())

    def triple_at(self, p) -> CirculantTriple:
        p = as_point(p)
        return CirculantTriple(self.A(p), self.B(p), self.C(p))

    def metric_at(self, p):
        return metric_components(self.triple_at(p))

    def domain_valid(self, p) -> DomainStatus:
        """Pointwise validity: off the excluded loci and A > C > B > 0.

        The ordering is checked in the stated sequence so the reason string
        names the first violated comparison.
        """
        p = as_point(p)
        for locus in self.excluded_loci:
            if locus.contains(p):
                return DomainStatus(False, f"excluded locus {locus.label}")
        t = self.triple_at(p)
        if not t.a > t.c:
            return DomainStatus(False, "A > C violated")
        if not t.c > t.b:
            return DomainStatus(False, "C > B violated")
        if not t.b > 0.0:
            return DomainStatus(False, "B > 0 violated")
        return DomainStatus(True)


def example_manifold() -> ManifoldSpec:
    """The built-in quadratic example, q-parallel everywhere it is valid."""
    return ManifoldSpec(
        name="example",
        A=parse_field("x1^2 + x2^2 + x3^2 + x4^2"),
        B=parse_field("x1*x2 + x2*x3 + x1*x4 + x3*x4"),
        C=parse_field("2*x1*x3 + 2*x2*x4"),
        excluded_loci=(
            SignLineLocus("(x,x,x,x)", (1, 1, 1, 1)),
            SignLineLocus("(-x,x,-x,x)", (-1, 1, -1, 1)),
        ),
    )


def constant_manifold(a: float, b: float, c: float, name: str = "constant") -> ManifoldSpec:
    """Constant coefficients: a flat space, handy as a reference case."""
    return ManifoldSpec(
        name=name,
        A=ScalarField.constant(a),
        B=ScalarField.constant(b),
        C=ScalarField.constant(c),
    )


class ConfigError(ValueError):
    """Malformed manifold config: bad line, unknown or missing key, bad field."""


_CONFIG_KEYS = ("name", "A", "B", "C")


def manifold_from_config(text: str, name: str | None = None) -> ManifoldSpec:
    """Parse the line-oriented config format into a ManifoldSpec.

    ``#`` starts a comment, blank lines are skipped, each remaining line must
    read ``key = value``. Errors carry the line number, and field expression
    errors additionally carry the field name and character position.
    """
    seen: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"line {lineno}: empty value for {key!r}")
        seen[key] = (lineno, value)

    for key in ("A", "B", "C"):
        if key not in seen:
            raise ConfigError(f"missing field {key}")

    parsed: dict[str, ScalarField] = {}
    for key in ("A", "B", "C"):
        lineno, expr = seen[key]
        try:
            parsed[key] = parse_field(expr)
        except ParseError as exc:
            raise ConfigError(f"field {key} (line {lineno}): {exc}") from exc

    resolved = seen.get("name", (0, ""))[1] or name or "custom"
    return ManifoldSpec(resolved, parsed["A"], parsed["B"], parsed["C"])


def load_manifold(path) -> ManifoldSpec:
    path = Path(path)
    return manifold_from_config(path.read_text(encoding="utf-8"), name=path.stem)
