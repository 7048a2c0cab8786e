"""Line-oriented curve-spec files.

::

    # comment
    name = semicubic
    param a = 1
    x = a*t^2
    y = a*t^3
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional

from .geometry import PlaneCurve
from .parser import ParseError, parse_expr, parse_rational


@dataclass(frozen=True)
class CurveSpec:
    name: str
    x_expr: str
    y_expr: str
    params: Mapping[str, Fraction] = field(default_factory=dict)

    def with_params(self, overrides: Mapping[str, Fraction]) -> CurveSpec:
        merged = dict(self.params)
        merged.update(overrides)
        return CurveSpec(self.name, self.x_expr, self.y_expr, merged)

    def to_curve(self) -> PlaneCurve:
        x = parse_expr(self.x_expr, self.params)
        y = parse_expr(self.y_expr, self.params)
        return PlaneCurve(x, y, name=self.name)

    def to_text(self) -> str:
        lines = [f"name = {self.name}"]
        lines += [f"param {k} = {v}" for k, v in self.params.items()]
        lines += [f"x = {self.x_expr}", f"y = {self.y_expr}"]
        return "\n".join(lines) + "\n"


_PARAM = re.compile(r"param\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)")
_FIELD = re.compile(r"(name|x|y)\s*=\s*(.*)")


def parse_curve_spec(text: str) -> CurveSpec:
    fields: dict[str, str] = {}
    params: dict[str, Fraction] = {}
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            m = _PARAM.fullmatch(line)
            if m:
                if m.group(1) == "t":
                    raise ParseError("'t' cannot be a parameter", offset, text)
                params[m.group(1)] = parse_rational(m.group(2))
            else:
                m = _FIELD.fullmatch(line)
                if not m:
                    raise ParseError(f"unrecognised line {line!r}", offset, text)
                if m.group(1) in fields:
                    raise ParseError(f"duplicate field {m.group(1)!r}", offset, text)
                fields[m.group(1)] = m.group(2).strip()
        offset += len(raw.encode("utf-8"))
    for key in ("x", "y"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}", offset, text)
    return CurveSpec(fields.get("name", "curve"), fields["x"], fields["y"], params)


def load_curve_spec(path, overrides: Optional[Mapping[str, Fraction]] = None) -> CurveSpec:
    spec = parse_curve_spec(Path(path).read_text())
    return spec.with_params(overrides) if overrides else spec
