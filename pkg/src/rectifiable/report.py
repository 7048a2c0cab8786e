"""Orchestration of the per-curve pipeline and its machine-readable report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Any, Iterable, Optional

from .affine import affine_cubic_diff
from .algebra import Poly, RatFunc
from .differentials import stratum_of
from .errors import RectifiableError
from .geometry import (
    Circle,
    Line,
    arc_length_qdiff,
    classify_line_circle,
    real_divisor_check,
)
from .integration import AnsatzInsolvable, Exact, RectificationVerdict, rectify
from .specfile import CurveSpec

SECTIONS = ("stratum", "rectify", "affine", "classify", "real_divisor")


class AnalysisError(RectifiableError):
    def __init__(self, operation: str, message: str):
        self.operation = operation
        super().__init__(f"{operation}: {message}")


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def poly_json(p: Poly) -> list[str]:
    return [frac_str(c) for c in p.coeffs]


def poly_from_json(coeffs: Iterable[str]) -> Poly:
    return Poly(Fraction(c) for c in coeffs)


def ratfunc_json(f: RatFunc) -> dict:
    return {"num": poly_json(f.num), "den": poly_json(f.den), "text": str(f)}


def ratfunc_from_json(d: dict) -> RatFunc:
    return RatFunc(poly_from_json(d["num"]), poly_from_json(d["den"]))


def verdict_json(v: RectificationVerdict) -> dict:
    if isinstance(v, Exact):
        prim = v.primitive
        return {
            "verdict": "exact",
            "k": v.k,
            "primitive": {
                "p": ratfunc_json(prim.p),
                "radicand": poly_json(prim.radicand),
                "scalar": frac_str(prim.scalar),
                "text": str(prim),
            },
            "f": ratfunc_json(v.f),
        }
    w = v.witness
    if isinstance(w, AnsatzInsolvable):
        wj = {"kind": "ansatz_insolvable", "unknowns": w.unknowns,
              "equations": w.equations, "rank": w.rank}
    else:
        wj = {"kind": "residue_obstruction", "factor": poly_json(w.factor),
              "remainder": ratfunc_json(w.residue)}
    wj["detail"] = w.describe()
    return {"verdict": "not_exact", "witness": wj}


def classification_json(c) -> dict:
    if isinstance(c, Line):
        return {"kind": "line", "a": frac_str(c.a), "b": frac_str(c.b), "c": frac_str(c.c)}
    if isinstance(c, Circle):
        return {"kind": "circle", "center": [frac_str(v) for v in c.center],
                "radius2": frac_str(c.radius2)}
    return {"kind": "neither"}


@dataclass
class AnalysisReport:
    curve: dict
    q: dict
    euclidean_stratum: Optional[list] = None
    rectification: Optional[dict] = None
    affine: Optional[dict] = None
    classification: Optional[dict] = None
    real_divisor: Optional[dict] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"unknown report fields {sorted(unknown)}")
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        return render_text(self.to_dict())


def render_text(obj: Any, indent: int = 0) -> str:
    """Key/value rendering with inline scalar arrays; stable field order."""
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if value is None:
            continue
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
            lines.append(f"{pad}{key}:")
            for v in value:
                lines.append(f"{pad}  - {json.dumps(v)}")
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: [{', '.join(str(v) for v in value)}]")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line)


def _guard(operation: str, fn, *args):
    try:
        return fn(*args)
    except (RectifiableError, ArithmeticError) as exc:
        raise AnalysisError(operation, str(exc)) from exc


def analyze(spec: CurveSpec, sections: Iterable[str] = SECTIONS) -> AnalysisReport:
    """Run the Euclidean and affine pipelines on one curve spec."""
    sections = set(sections)
    unknown = sections - set(SECTIONS)
    if unknown:
        raise ValueError(f"unknown sections {sorted(unknown)}")
    curve = _guard("PlaneCurve", spec.to_curve)
    q = _guard("arc_length_qdiff", arc_length_qdiff, curve)
    report = AnalysisReport(
        curve={"name": spec.name, "x": spec.x_expr, "y": spec.y_expr,
               "params": {k: frac_str(v) for k, v in spec.params.items()},
               "x_normal": str(curve.x), "y_normal": str(curve.y)},
        q=ratfunc_json(q.coeff),
    )
    if "stratum" in sections:
        report.euclidean_stratum = list(_guard("stratum_of", stratum_of, q).orders)
    if "rectify" in sections:
        report.rectification = verdict_json(_guard("rectify", rectify, q))
    if "affine" in sections:
        try:
            cubic = affine_cubic_diff(curve)
        except RectifiableError as exc:
            report.affine = {"error": f"affine_cubic_diff: {exc}"}
        else:
            report.affine = {
                "cubic": ratfunc_json(cubic.coeff),
                "stratum": list(_guard("stratum_of", stratum_of, cubic.differential).orders),
                "verdict": verdict_json(_guard("affine_rectify", rectify, cubic.differential)),
            }
    if "classify" in sections:
        report.classification = classification_json(
            _guard("classify_line_circle", classify_line_circle, curve))
    if "real_divisor" in sections:
        rd = _guard("real_divisor_check", real_divisor_check, curve)
        report.real_divisor = {
            "passed": rd.passed,
            "conjugation_invariant": rd.conjugation_invariant,
            "failure": rd.failure,
            "factors": [{"factor": poly_json(f.factor), "q_order": f.q_order,
                         "real_roots": f.real_roots, "dz_orders": list(f.dz_orders)}
                        for f in rd.factors],
            "infinity": list(rd.infinity),
        }
    return report
