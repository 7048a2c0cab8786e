"""Euclidean plane-curve layer for rational parametrisations.

Everything here is exact: the arc-length quadratic differential, the isotropic
splitting ``q = dz dw`` over Q(i), evolutes, involutes in the radical ring of
the arc-length primitive, the line/circle test, and realisation of a given
genus-0 quadratic differential as ``dx^2 + dy^2``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    ONE,
    GaussianRational,
    I,
    Poly,
    RadicalElement,
    RatFunc,
    as_ratfunc,
    count_real_roots,
    poly_gcd,
    solve_linear,
    squarefree_decompose,
)
from .differentials import KDifferential, divisor_of
from .errors import DegenerateCurve, IsotropicLine, LineHasNoEvolute, NotRectifiable
from .integration import Exact, decompose_radicand, hermite_reduce, rectify


@dataclass(frozen=True)
class PlaneCurve:
    x: RatFunc
    y: RatFunc
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "x", as_ratfunc(self.x))
        object.__setattr__(self, "y", as_ratfunc(self.y))
        if not (self.x.is_real and self.y.is_real):
            raise ValueError("plane curves need real coordinates")
        if self.x.is_constant and self.y.is_constant:
            raise DegenerateCurve("constant curve")

    @property
    def z(self) -> RatFunc:
        """x + i y over Q(i)."""
        return self.x + self.y * I

    def __call__(self, t) -> tuple:
        return self.x(t), self.y(t)

    def __eq__(self, other):
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))


@dataclass(frozen=True)
class IsotropicSplit:
    dz: KDifferential
    dw: KDifferential


@dataclass(frozen=True)
class RadicalCurve:
    X: RadicalElement
    Y: RadicalElement

    def to_float(self, t: float) -> tuple[float, float]:
        return self.X.to_float(t), self.Y.to_float(t)


@dataclass(frozen=True)
class Degenerate:
    """Evolute collapsed to a single point."""

    point: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y = c``."""

    a: Fraction
    b: Fraction
    c: Fraction


@dataclass(frozen=True)
class Circle:
    center: tuple[Fraction, Fraction]
    radius2: Fraction


@dataclass(frozen=True)
class Neither:
    pass


def _wedge(c: PlaneCurve) -> RatFunc:
    dx, dy = c.x.derivative(), c.y.derivative()
    return dx * dy.derivative() - dx.derivative() * dy


def arc_length_qdiff(c: PlaneCurve) -> KDifferential:
    """``q = (x'^2 + y'^2) dt^2``."""
    dx, dy = c.x.derivative(), c.y.derivative()
    h = dx * dx + dy * dy
    if h.is_zero:
        raise IsotropicLine(f"x'^2 + y'^2 vanishes identically for {c.name or c}")
    return KDifferential(2, h, label=c.name)


def isotropic_split(c: PlaneCurve) -> IsotropicSplit:
    arc_length_qdiff(c)
    dz = c.x.derivative() + c.y.derivative() * I
    return IsotropicSplit(KDifferential(1, dz), KDifferential(1, dz.conj()))


@dataclass(frozen=True)
class FactorParity:
    factor: Poly
    q_order: int
    real_roots: int
    dz_orders: tuple[int, ...]


@dataclass(frozen=True)
class RealDivisorReport:
    passed: bool
    conjugation_invariant: bool
    infinity: tuple[int, int]
    factors: tuple[FactorParity, ...]
    failure: Optional[str] = None


def _pieces(h: RatFunc) -> list[tuple[Poly, int]]:
    return [(f, m) for f, m in squarefree_decompose(h.num)] + \
        [(f, -m) for f, m in squarefree_decompose(h.den)]


def real_divisor_check(c: PlaneCurve) -> RealDivisorReport:
    """Conjugation symmetry and even real orders of ``q``.

    Real roots of each squarefree factor of ``q`` are counted by Sturm
    sequences; the order of ``dz`` there is read off from the squarefree
    factors of ``dz`` over Q(i) whose real part ``gcd(G, conj G)`` has real
    roots. At a real point the orders of ``dz`` and ``dw`` agree, so the
    order of ``q`` must be exactly twice the order of ``dz``.
    """
    q = arc_length_qdiff(c)
    split = isotropic_split(c)
    dz, dw = split.dz.coeff, split.dw.coeff
    conj_ok = q.coeff.is_real and dw == dz.conj() and dz * dw == q.coeff
    failure = None if conj_ok else "dz*dw does not reproduce q with conjugate factors"

    dz_pieces = _pieces(dz)
    factors = []
    for P, e in divisor_of(q).finite_part:
        nreal = count_real_roots(P)
        orders: set[int] = set()
        covered = 0
        if nreal:
            for F, m in dz_pieces:
                G = poly_gcd(F, P)
                if G.degree <= 0:
                    continue
                H = poly_gcd(G, G.conj())
                if H.degree > 0 and H.is_real:
                    n = count_real_roots(H)
                    if n:
                        covered += n
                        orders.add(m)
        factors.append(FactorParity(P, e, nreal, tuple(sorted(orders))))
        if failure:
            continue
        if nreal and covered != nreal:
            failure = f"real roots of {P} are not singular for dz"
        elif any(e != 2 * m for m in orders):
            failure = f"order {e} of q along {P} is not twice the dz order {sorted(orders)}"
        elif nreal == 0 and P.degree % 2:
            failure = f"{P} has odd degree but no real roots"
    q_inf = divisor_of(q).infinity_order
    dz_inf = dz.den.degree - dz.num.degree - 2
    if failure is None and q_inf != 2 * dz_inf:
        failure = f"order {q_inf} of q at infinity is not twice {dz_inf}"
    return RealDivisorReport(failure is None, conj_ok, (q_inf, dz_inf), tuple(factors), failure)


def evolute(c: PlaneCurve) -> Union[PlaneCurve, Degenerate]:
    """Centres of curvature ``r + (x'^2+y'^2)/(x'y''-x''y') * (-y', x')``."""
    w = _wedge(c)
    if w.is_zero:
        raise LineHasNoEvolute(f"{c.name or 'the curve'} is a line; its evolute is at infinity")
    dx, dy = c.x.derivative(), c.y.derivative()
    s = (dx * dx + dy * dy) / w
    ex, ey = c.x - s * dy, c.y + s * dx
    if ex.is_constant and ey.is_constant:
        return Degenerate((ex.constant_value(), ey.constant_value()))
    return PlaneCurve(ex, ey, name=f"evolute of {c.name}" if c.name else None)


def involutes(c: PlaneCurve, C0=0) -> RadicalCurve:
    """Involute ``r - (S + C0) T`` in the radical ring of the arc length ``S``.

    With ``h = c A^2 C`` the arc-length element is ``A r dt`` for
    ``r = (c C)^(1/2)`` and ``S = p r``; the unit tangent is ``(x', y')/(A r)``.
    """
    q = arc_length_qdiff(c)
    verdict = rectify(q)
    if not isinstance(verdict, Exact):
        raise NotRectifiable(f"{c.name or 'curve'}: {verdict.witness.describe()}")
    prim = verdict.primitive
    _, A, _ = decompose_radicand(q.coeff, 2)
    r = RadicalElement([RatFunc(), RatFunc(1)], prim.radicand, 2, prim.scalar)
    S = r * prim.p
    speed = r * A
    shift = S + as_ratfunc(C0)
    X = shift * c.x.derivative() / speed
    Y = shift * c.y.derivative() / speed
    return RadicalCurve(c.x - X, c.y - Y)


def evolute_of_radical(rc: RadicalCurve) -> RadicalCurve:
    dX, dY = rc.X.derivative(), rc.Y.derivative()
    w = dX * dY.derivative() - dX.derivative() * dY
    if w.is_zero:
        raise DegenerateCurve("radical curve has identically zero curvature numerator")
    s = (dX * dX + dY * dY) / w
    return RadicalCurve(rc.X - s * dY, rc.Y + s * dX)


def classify_line_circle(c: PlaneCurve) -> Union[Line, Circle, Neither]:
    w = _wedge(c)
    if w.is_zero:
        dx, dy = c.x.derivative(), c.y.derivative()
        if dx.is_zero:
            return Line(Fraction(1), Fraction(0), c.x.constant_value())
        m = (dy / dx).constant_value()
        return Line(m, Fraction(-1), (c.x * m - c.y).constant_value())
    # 2u x + 2v y - e = x^2 + y^2 after clearing a common denominator D
    D = c.x.den * c.y.den
    D = D.exact_div(poly_gcd(c.x.den, c.y.den))
    X = (c.x * RatFunc(D)).num
    Y = (c.y * RatFunc(D)).num
    cols = [X * D * 2, Y * D * 2, -(D * D)]
    rhs_poly = X * X + Y * Y
    n = max(p.degree for p in cols + [rhs_poly]) + 1
    sol, rank = solve_linear([[col.coeff(i) for col in cols] for i in range(n)],
                             [rhs_poly.coeff(i) for i in range(n)])
    if sol is None or rank < 3:
        return Neither()
    u, v, e = sol
    r2 = u * u + v * v - e
    if r2 <= 0:
        return Neither()
    return Circle((u, v), r2)


@dataclass(frozen=True)
class Realization:
    """A curve with ``similarity * arc_length_qdiff(curve) = q``.

    ``similarity`` is 1 when the leading constant of ``q`` is a norm from
    Q(i); otherwise the curve realises ``q`` up to the homothety of ratio
    ``sqrt(similarity)``.
    """

    curve: PlaneCurve
    half_divisor: tuple[tuple[Poly, int], ...]
    similarity: Fraction = Fraction(1)


def gaussian_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Irreducible factorisation of a rational polynomial over Q(i) (monic factors)."""
    import sympy

    if p.degree <= 0:
        return []
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(expr, t, gaussian=True)
    out = []
    for f, m in factors:
        coeffs = sympy.Poly(f, t).all_coeffs()[::-1]
        conv = [GaussianRational(Fraction(str(sympy.re(cf))), Fraction(str(sympy.im(cf))))
                for cf in coeffs]
        out.append((Poly(conv).monic(), int(m)))
    return out


def _two_squares(value: Fraction, limit: int = 10 ** 6) -> Optional[GaussianRational]:
    """lam in Q(i) with |lam|^2 = value, by bounded search."""
    n = value.numerator * value.denominator
    m = value.denominator
    a = 0
    while a * a <= n and a <= limit:
        b2 = n - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return GaussianRational(Fraction(b, m), Fraction(a, m))
        a += 1
    return None


def _conjugate_classes(factors):
    """Group Q(i)-irreducible factors into self-conjugate ones and conjugate pairs."""
    by_poly = {f: e for f, e in factors}
    seen = set()
    selfconj, pairs = [], []
    for f, e in sorted(factors, key=lambda fe: str(fe[0])):
        if f in seen:
            continue
        fc = f.conj().monic()
        seen.add(f)
        if fc == f:
            selfconj.append((f, e))
        else:
            if by_poly.get(fc) != e:
                raise ArithmeticError("divisor of q is not conjugation invariant")
            seen.add(fc)
            pairs.append((f, fc, e))
    return selfconj, pairs


def realize_genus0(q: KDifferential, bound: int) -> list[Realization]:
    """Curves ``(x, y)`` over Q with ``dx^2 + dy^2 = q``, up to direct motions.

    Candidate divisors ``D`` of ``dz`` satisfy ``D + conj(D) = div(q)`` with
    each order within ``bound`` of the symmetric split; a candidate is kept
    when ``prod F^d dt`` has zero residues (Hermite remainder zero).
    """
    if q.k != 2:
        raise ValueError("realisation needs a quadratic differential")
    h = q.coeff
    if not h.is_real:
        raise ValueError("q must have rational coefficients")
    ell = h.num.lc
    if ell <= 0:
        return []
    factors = [(f, e) for f, e in gaussian_factors(h.num)]
    factors += [(f, -e) for f, e in gaussian_factors(h.den)]
    selfconj, pairs = _conjugate_classes(factors)
    base = RatFunc(1)
    fixed = []
    for f, e in selfconj:
        if e % 2:
            return []
        base = base * RatFunc(f) ** (e // 2)
        fixed.append((f, e // 2))
    choices = []
    for f, fc, e in pairs:
        lo = math.ceil(Fraction(e, 2) - bound)
        hi = math.floor(Fraction(e, 2) + bound)
        choices.append([(f, d, fc, e - d) for d in range(lo, hi + 1)])
    lam = _two_squares(Fraction(ell))
    similarity = Fraction(1) if lam is not None else Fraction(ell)
    if lam is None:
        lam = GaussianRational(1)

    out = []
    for combo in itertools.product(*choices):
        G = base
        half = list(fixed)
        for f, d, fc, dc in combo:
            G = G * RatFunc(f) ** d * RatFunc(fc) ** dc
            half += [(f, d), (fc, dc)]
        Z, rem = hermite_reduce(G)
        if not rem.is_zero:
            continue
        z = Z * lam
        curve = PlaneCurve(z.real_part(), z.imag_part(), name="realization")
        assert arc_length_qdiff(curve).coeff * similarity == h
        out.append(Realization(curve, tuple(half), similarity))
    return out


def euclidean_equivalent(c1: PlaneCurve, c2: PlaneCurve):
    """``(lam, offset)`` with ``z2 = lam z1 + offset`` and ``|lam| = 1``, or None."""
    dz1, dz2 = c1.z.derivative(), c2.z.derivative()
    ratio = dz2 / dz1
    if not ratio.is_constant:
        return None
    lam = GaussianRational.lift(ratio.constant_value())
    if lam.norm() != 1:
        return None
    offset = c2.z - c1.z * lam
    if not offset.is_constant:
        return None
    return lam, GaussianRational.lift(offset.constant_value())
