"""k-differentials h(t) dt^k on the parameter sphere, their divisors and strata."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import ONE, Poly, RatFunc, as_ratfunc, poly_gcd, squarefree_decompose


@dataclass(frozen=True)
class KDifferential:
    """``coeff(t) * dt**k``; the coefficient may live over Q or Q(i)."""

    k: int
    coeff: RatFunc
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_ratfunc(self.coeff))
        if self.k < 1:
            raise ValueError("differential order must be positive")
        if self.coeff.is_zero:
            raise ValueError("zero differential")

    def __mul__(self, other: KDifferential) -> KDifferential:
        return KDifferential(self.k + other.k, self.coeff * other.coeff)

    def inverted_chart(self) -> KDifferential:
        """Rewrite in the chart s = 1/t: h(1/s) * (-1)^k * s^(-2k) ds^k."""
        s = RatFunc.t()
        h = self.coeff.compose(1 / s) * (-1) ** self.k / s ** (2 * self.k)
        return KDifferential(self.k, h, self.label)

    def shifted(self, c) -> KDifferential:
        """Pull back along t -> t + c."""
        return KDifferential(self.k, self.coeff.compose(RatFunc.t() + c), self.label)

    def __str__(self):
        return f"({self.coeff}) dt^{self.k}"


@dataclass(frozen=True)
class Divisor:
    """Orders on squarefree factor classes plus the point at infinity."""

    finite_part: tuple[tuple[Poly, int], ...]
    infinity_order: int

    @property
    def degree(self) -> int:
        return sum(o * f.degree for f, o in self.finite_part) + self.infinity_order

    def order_of(self, factor: Poly) -> int:
        for f, o in self.finite_part:
            if f == factor:
                return o
        return 0

    def __add__(self, other: Divisor) -> Divisor:
        return _combine(self, other)


def _combine(d1: Divisor, d2: Divisor) -> Divisor:
    # Refine both factor lists to a common coprime basis, then add orders.
    pieces: list[tuple[Poly, int]] = list(d1.finite_part)
    for g, o2 in d2.finite_part:
        new_pieces = []
        rest = g
        for f, o1 in pieces:
            common = poly_gcd(f, rest)
            if common.degree > 0:
                f_only = f.exact_div(common)
                rest = rest.exact_div(common)
                new_pieces.append((common, o1 + o2))
                if f_only.degree > 0:
                    new_pieces.append((f_only, o1))
            else:
                new_pieces.append((f, o1))
        if rest.degree > 0:
            new_pieces.append((rest, o2))
        pieces = new_pieces
    return Divisor(_canonical(pieces), d1.infinity_order + d2.infinity_order)


def _canonical(pieces) -> tuple[tuple[Poly, int], ...]:
    """Merge factors with equal orders and drop order zero."""
    by_order: dict[int, Poly] = {}
    for f, o in pieces:
        if o == 0:
            continue
        by_order[o] = by_order.get(o, ONE) * f
    return tuple(sorted(((f, o) for o, f in by_order.items()), key=lambda fo: -fo[1]))


@dataclass(frozen=True)
class StratumSignature:
    """Sorted (descending) multiset of nonzero singularity orders."""

    k: int
    orders: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.orders)

    def __len__(self):
        return len(self.orders)

    def __str__(self):
        return f"Omega^{self.k} M_0({','.join(str(o) for o in self.orders)})"


def divisor_of(d: KDifferential) -> Divisor:
    """Divisor of ``h dt^k`` on the sphere.

    Finite orders come from the squarefree decompositions of the numerator
    and denominator; at infinity the order is ``deg den - deg num - 2k``.
    """
    h = d.coeff
    if h.is_zero:
        raise ValueError("divisor of the zero differential")
    pieces = [(f, m) for f, m in squarefree_decompose(h.num)]
    pieces += [(f, -m) for f, m in squarefree_decompose(h.den)]
    inf = h.den.degree - h.num.degree - 2 * d.k
    return Divisor(_canonical(pieces), inf)


def stratum_of(d: KDifferential) -> StratumSignature:
    div = divisor_of(d)
    orders = []
    for f, o in div.finite_part:
        orders.extend([o] * f.degree)
    if div.infinity_order:
        orders.append(div.infinity_order)
    return StratumSignature(d.k, tuple(sorted(orders, reverse=True)))


def monomial_normal_form(d: KDifferential) -> Optional[tuple[Fraction, int]]:
    """``(lam, a)`` if the coefficient is ``lam * t**a`` in this chart, else None."""
    h = d.coeff
    n, den = h.num, h.den
    if sum(1 for c in n.coeffs if c != 0) != 1 or sum(1 for c in den.coeffs if c != 0) != 1:
        return None
    return n.lc, n.degree - den.degree
