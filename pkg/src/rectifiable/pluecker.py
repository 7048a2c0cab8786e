"""Plücker counts for generic and generic rational plane curves and their evolutes.

The generic dual-node count ``C(d(d-1)-1, 2) - C(d-1, 2)`` is the classical
formula as usually quoted; it carries no cusp correction and is reproduced
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal, Optional

Variant = Literal["generic", "rational"]


@dataclass(frozen=True)
class PlueckerRecord:
    variant: str
    degree: int
    genus: int
    klass: int
    nodes: int
    cusps: int
    inflections: int
    dual_nodes: int
    dual_cusps: int
    dual_inflections: int


@dataclass(frozen=True)
class EvoluteCounts:
    variant: str
    degree: int
    evolute_degree: int
    evolute_class: int
    cusps: int
    nodes: int
    normals_nodes: int
    # no closed form is quoted for generic curves
    normals_inflections: Optional[int]


def _check(d: int):
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"degree must be an integer >= 2, got {d!r}")


def pluecker_rational(d: int) -> PlueckerRecord:
    _check(d)
    return PlueckerRecord(
        variant="rational", degree=d, genus=0, klass=2 * d - 2,
        nodes=comb(d - 1, 2), cusps=0, inflections=3 * (d - 2),
        dual_nodes=2 * (d - 2) * (d - 3), dual_cusps=3 * (d - 2), dual_inflections=0,
    )


def pluecker_generic(d: int) -> PlueckerRecord:
    _check(d)
    return PlueckerRecord(
        variant="generic", degree=d, genus=comb(d - 1, 2), klass=d * (d - 1),
        nodes=0, cusps=0, inflections=3 * d * (d - 2),
        dual_nodes=comb(d * (d - 1) - 1, 2) - comb(d - 1, 2),
        dual_cusps=3 * d * (d - 2), dual_inflections=0,
    )


def pluecker(d: int, variant: Variant = "rational") -> PlueckerRecord:
    if variant == "rational":
        return pluecker_rational(d)
    if variant == "generic":
        return pluecker_generic(d)
    raise ValueError(f"unknown variant {variant!r}")


def evolute_counts(d: int, variant: Variant = "rational") -> EvoluteCounts:
    _check(d)
    if variant == "rational":
        return EvoluteCounts(
            variant="rational", degree=d, evolute_degree=6 * (d - 1),
            evolute_class=3 * d - 2, cusps=3 * (3 * d - 4),
            nodes=2 * (3 * d - 4) * (3 * d - 5), normals_nodes=comb(3 * d - 3, 2),
            normals_inflections=9 * d - 12,
        )
    if variant == "generic":
        return EvoluteCounts(
            variant="generic", degree=d, evolute_degree=3 * d * (d - 1),
            evolute_class=d * d, cusps=d * (6 * d - 9),
            nodes=d * (3 * d - 5) * (3 * d * d - d - 6) // 2,
            normals_nodes=d * (d - 1) * (d * d + d - 3) // 2,
            normals_inflections=None,
        )
    raise ValueError(f"unknown variant {variant!r}")
