"""Bundled example curves with their expected invariants."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .parser import parse_expr
from .report import AnalysisError, AnalysisReport, analyze, ratfunc_from_json
from .specfile import CurveSpec, parse_curve_spec


@dataclass(frozen=True)
class ExpectedDifference:
    """A reference value that disagrees with direct computation."""

    field: str
    reference: str
    computed: str
    reason: str


@dataclass(frozen=True)
class Expectation:
    euclidean_stratum: tuple[int, ...]
    exact: bool
    classification: str = "neither"
    zero_factor: Optional[str] = None
    f: Optional[str] = None
    primitive: Optional[str] = None
    affine_coeff: Optional[str] = None
    affine_stratum: Optional[tuple[int, ...]] = None
    affine_exact: Optional[bool] = None
    differences: tuple[ExpectedDifference, ...] = ()


@dataclass(frozen=True)
class Fixture:
    spec: CurveSpec
    expect: Expectation


def _spec(text: str) -> CurveSpec:
    return parse_curve_spec(text)


FIXTURES: dict[str, Fixture] = {
    "hyperbola": Fixture(
        _spec("name = hyperbola\nparam a = 1\nparam b = 2\n"
              "x = a*(1 + t^2)/(2*t)\ny = b*(1 - t^2)/(2*t)\n"),
        Expectation((1, 1, 1, 1, -4, -4), False,
                    zero_factor="t^4 + 6/5*t^2 + 1",
                    affine_coeff="2/t^3", affine_stratum=(-3, -3), affine_exact=False),
    ),
    "ellipse": Fixture(
        _spec("name = ellipse\nparam a = 2\nparam b = 1\n"
              "x = a*2*t/(1 + t^2)\ny = b*(1 - t^2)/(1 + t^2)\n"),
        Expectation((1, 1, 1, 1, -4, -4), False,
                    zero_factor="t^4 - t^2 + 1",
                    affine_coeff="-16/(1 + t^2)^3", affine_stratum=(-3, -3), affine_exact=False),
    ),
    "circle": Fixture(
        _spec("name = circle\nx = 2*t/(1 + t^2)\ny = (1 - t^2)/(1 + t^2)\n"),
        Expectation((-2, -2), False, classification="circle",
                    affine_coeff="-8/(1 + t^2)^3", affine_stratum=(-3, -3), affine_exact=False),
    ),
    "parabola": Fixture(
        _spec("name = parabola\nx = t\ny = t^2\n"),
        Expectation((1, 1, -6), False,
                    affine_coeff="2", affine_stratum=(-6,), affine_exact=True),
    ),
    "lemniscate": Fixture(
        _spec("name = lemniscate\nx = (t + t^3)/(1 + t^4)\ny = (t - t^3)/(1 + t^4)\n"),
        Expectation((-1, -1, -1, -1), False,
                    affine_coeff="-12*t/(t^4 + 1)^2", affine_stratum=(1, 1, -2, -2, -2, -2)),
    ),
    "semicubic": Fixture(
        _spec("name = semicubic\nparam a = 1\nx = a*t^2\ny = a*t^3\n"),
        Expectation((2, 1, 1, -8), True, f="(4 + 9*t^2)^3/2916",
                    affine_coeff="6*t^2", affine_stratum=(2, -8), affine_exact=True),
    ),
    "ph_quintic": Fixture(
        _spec("name = ph_quintic\nx = t^5/5 - 2*t^3 + t\ny = t^4 - 2*t^2\n"),
        Expectation((4, 4, -12), True, primitive="t^5/5 + 2*t^3/3 + t"),
    ),
    "many_zeros": Fixture(
        _spec("name = many_zeros\nx = t^3/(t^2 + 1)^2\ny = (3*t^2 + 1)/(t^2 + 1)^2\n"),
        Expectation((2, 1, 1, 1, 1, 1, 1, -6, -6), False),
    ),
    "nodal_cubic": Fixture(
        _spec("name = nodal_cubic\nx = t^2 - 1\ny = t^3 - t\n"),
        Expectation((1, 1, 1, 1, -8), False,
                    affine_coeff="6*t^2 + 2", affine_stratum=(1, 1, -8),
                    differences=(ExpectedDifference(
                        "affine.cubic", "6*t^2 + 1", "6*t^2 + 2",
                        "x'y'' - x''y' = 2t*6t - 2*(3t^2 - 1) = 6t^2 + 2"),)),
    ),
    "graph_cube": Fixture(
        _spec("name = graph_cube\nx = t\ny = t^3\n"),
        Expectation((1, 1, 1, 1, -8), False,
                    affine_coeff="6*t", affine_stratum=(1, -7), affine_exact=True),
    ),
    "graph_reciprocal": Fixture(
        _spec("name = graph_reciprocal\nx = t\ny = 1/t\n"),
        Expectation((1, 1, 1, 1, -4, -4), False,
                    affine_coeff="2/t^3", affine_stratum=(-3, -3), affine_exact=False),
    ),
    "line": Fixture(
        _spec("name = line\nx = t\ny = 0\n"),
        Expectation((-4,), True, classification="line", primitive="t"),
    ),
}


@dataclass(frozen=True)
class Mismatch:
    name: str
    field: str
    expected: str
    actual: str

    def __str__(self):
        return f"{self.name}: {self.field} expected {self.expected}, got {self.actual}"


@dataclass
class FixtureResult:
    name: str
    report: Optional[AnalysisReport]
    mismatches: list[Mismatch] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


@dataclass
class CorpusSummary:
    results: list[FixtureResult]

    @property
    def mismatches(self) -> list[Mismatch]:
        return [m for r in self.results for m in r.mismatches]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_fixture(name: str) -> FixtureResult:
    fixture = FIXTURES[name]
    exp = fixture.expect
    try:
        report = analyze(fixture.spec)
    except AnalysisError as exc:
        return FixtureResult(name, None, [Mismatch(name, "analysis", "success", str(exc))])
    result = FixtureResult(name, report)

    def check(fld, expected, actual):
        if expected != actual:
            result.mismatches.append(Mismatch(name, fld, str(expected), str(actual)))

    check("euclidean_stratum", list(exp.euclidean_stratum), report.euclidean_stratum)
    rect = report.rectification
    check("rectification.verdict", "exact" if exp.exact else "not_exact", rect["verdict"])
    check("classification", exp.classification, report.classification["kind"])
    if exp.zero_factor is not None:
        zeros = ratfunc_from_json(report.q).num.monic()
        check("zero_factor", parse_expr(exp.zero_factor).num.monic(), zeros)
    if exp.f is not None and rect["verdict"] == "exact":
        check("rectification.f", parse_expr(exp.f), ratfunc_from_json(rect["f"]))
    if exp.primitive is not None and rect["verdict"] == "exact":
        prim = rect["primitive"]
        check("rectification.primitive", parse_expr(exp.primitive), ratfunc_from_json(prim["p"]))
        check("rectification.radicand", ["1/1"], prim["radicand"])
    affine = report.affine
    if exp.affine_coeff is not None:
        actual = ratfunc_from_json(affine["cubic"]) if "cubic" in affine else affine.get("error")
        check("affine.cubic", parse_expr(exp.affine_coeff), actual)
    if exp.affine_stratum is not None:
        check("affine.stratum", list(exp.affine_stratum), affine.get("stratum"))
    if exp.affine_exact is not None:
        verdict = affine.get("verdict", {}).get("verdict")
        check("affine.verdict", "exact" if exp.affine_exact else "not_exact", verdict)
    for diff in exp.differences:
        result.notes.append(f"{name}: {diff.field} reference {diff.reference}, "
                            f"computed {diff.computed} ({diff.reason})")
    return result


def run_corpus(names=None, workers: int = 1) -> CorpusSummary:
    """Analyse fixtures (sorted by name) and compare against expectations."""
    names = sorted(names if names is not None else FIXTURES)
    unknown = [n for n in names if n not in FIXTURES]
    if unknown:
        raise KeyError(f"unknown fixtures {unknown}")
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(check_fixture, names))
    else:
        results = [check_fixture(n) for n in names]
    return CorpusSummary(results)


__all__ = [
    "FIXTURES", "Expectation", "ExpectedDifference", "Fixture", "Mismatch",
    "FixtureResult", "CorpusSummary", "check_fixture", "run_corpus"
]
