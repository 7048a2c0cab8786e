"""Special-affine cubic differential ``(gamma' ^ gamma'') dt^3`` and affine involutes."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import RatFunc, as_ratfunc
from .differentials import KDifferential
from .errors import ZeroCubicDifferential
from .geometry import PlaneCurve
from .integration import RectificationVerdict, rectify


@dataclass(frozen=True)
class AffineCubic:
    differential: KDifferential
    curve: PlaneCurve

    @property
    def coeff(self) -> RatFunc:
        return self.differential.coeff


def affine_cubic_diff(c: PlaneCurve) -> AffineCubic:
    dx, dy = c.x.derivative(), c.y.derivative()
    w = dx * dy.derivative() - dx.derivative() * dy
    if w.is_zero:
        raise ZeroCubicDifferential(f"x'y'' - x''y' vanishes for {c.name or 'the curve'}, which is a line")
    return AffineCubic(KDifferential(3, w, label=c.name), c)


def affine_rectify(c: PlaneCurve) -> RectificationVerdict:
    """Exact iff the affine involutes of ``c`` are algebraic."""
    return rectify(affine_cubic_diff(c).differential)


def graph_cubic(R) -> AffineCubic:
    """Cubic differential ``R'' dt^3`` of the graph ``y = R(x)``."""
    R = as_ratfunc(R)
    d2 = R.derivative().derivative()
    if d2.is_zero:
        raise ZeroCubicDifferential(f"{R} is affine")
    return AffineCubic(KDifferential(3, d2), PlaneCurve(RatFunc.t(), R))
