"""Exactness engine for k-differentials on the sphere.

A k-differential ``h dt^k`` is written as ``h = c * A**k * C`` with ``C`` monic
and k-power-free. A branch of its k-th root is ``A * (c*C)**(1/k) dt``.

* If ``C`` is constant the integrand is rational and Hermite reduction decides
  whether its primitive is rational (zero remainder) or has a logarithmic part.
* Otherwise the deck group of the canonical cover multiplies ``(c*C)**(1/k)``
  by k-th roots of unity, and an algebraic primitive must lie in the same
  eigenspace, i.e. equal ``p * (c*C)**(1/k)`` with ``p`` rational. That reduces
  exactness to the linear equation ``p' C + p C'/k = A C`` for rational ``p``.

Local order analysis bounds ``p``: its poles sit among the poles of ``A`` with
strictly smaller order, and ``deg p = deg A + 1`` at infinity. The ansatz
``p = u / den(A)`` with ``deg u <= deg num(A) + deg den(A) + 2`` overshoots that
bound; since the homogeneous equation has only the zero solution for
nonconstant k-power-free ``C``, the overshoot cannot introduce spurious
solutions. Absence of a solution therefore certifies non-exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    ONE,
    Poly,
    RadicalElement,
    RatFunc,
    as_ratfunc,
    poly_gcd,
    solve_bezout,
    solve_linear,
    squarefree_decompose,
)
from .differentials import KDifferential


@dataclass(frozen=True)
class RadicalPrimitive:
    """``g = p * (scalar * radicand)**(1/k)`` with ``g' = A * (scalar * radicand)**(1/k)``."""

    p: RatFunc
    radicand: Poly
    k: int
    scalar: Fraction

    def as_radical(self) -> RadicalElement:
        return RadicalElement([RatFunc(), self.p], self.radicand, self.k, self.scalar)

    def __str__(self):
        if self.radicand == ONE and self.scalar == 1:
            return str(self.p)
        inner = str(self.radicand) if self.scalar == 1 else f"{self.scalar}*({self.radicand})"
        return f"({self.p})*({inner})^(1/{self.k})"


@dataclass(frozen=True)
class ResidueObstruction:
    """Nonzero logarithmic part: remainder ``residue`` with squarefree ``factor`` denominator."""

    factor: Poly
    residue: RatFunc

    def describe(self) -> str:
        return f"nonzero residues along {self.factor} (remainder {self.residue})"


@dataclass(frozen=True)
class AnsatzInsolvable:
    unknowns: int
    equations: int
    rank: int

    def describe(self) -> str:
        return (f"radical ansatz has no rational solution "
                f"({self.equations} equations, {self.unknowns} unknowns, rank {self.rank})")


@dataclass(frozen=True)
class Exact:
    primitive: RadicalPrimitive
    f: RatFunc
    k: int

    exact = True


@dataclass(frozen=True)
class NotExact:
    witness: Union[ResidueObstruction, AnsatzInsolvable]

    exact = False


RectificationVerdict = Union[Exact, NotExact]


def decompose_radicand(h: RatFunc, k: int) -> tuple[Fraction, RatFunc, Poly]:
    """Split ``h = c * A**k * C`` with ``C`` monic and k-power-free."""
    h = as_ratfunc(h)
    if h.is_zero:
        raise ValueError("cannot decompose the zero function")
    A = RatFunc(1)
    C = ONE
    pieces = [(f, m) for f, m in squarefree_decompose(h.num)]
    pieces += [(f, -m) for f, m in squarefree_decompose(h.den)]
    for f, e in pieces:
        r = e % k
        A = A * RatFunc(f) ** ((e - r) // k)
        C = C * f ** r
    return h.num.lc, A, C


def hermite_reduce(A) -> tuple[RatFunc, RatFunc]:
    """``A = rational_part' + remainder`` with a squarefree remainder denominator.

    The remainder is a proper fraction; it vanishes iff the primitive of ``A``
    is rational. Works over Q and Q(i).
    """
    A = as_ratfunc(A)
    if A.is_zero:
        return RatFunc(), RatFunc()
    poly_part, num = divmod(A.num, A.den)
    g = RatFunc(poly_part.integral())
    D = A.den
    d_minus = poly_gcd(D, D.derivative())
    d_star = D.exact_div(d_minus)
    while d_minus.degree > 0:
        d_minus2 = poly_gcd(d_minus, d_minus.derivative())
        d_minus_star = d_minus.exact_div(d_minus2)
        a = -(d_star * d_minus.derivative()).exact_div(d_minus)
        B, Cq = solve_bezout(a, d_minus_star, num)
        num = Cq - B.derivative() * d_star.exact_div(d_minus_star)
        g = g + RatFunc(B, d_minus)
        d_minus = d_minus2
    q, r = divmod(num, d_star)
    if not q.is_zero:
        g = g + RatFunc(q.integral())
    return g, RatFunc(r, d_star)


def _ansatz_system(A: RatFunc, C: Poly, k: int, extra: int = 2):
    N, E = A.num, A.den
    n = N.degree + E.degree + extra + 1
    # k(u'E - uE')C + uC'E = k N C E, linear in the coefficients of u
    dE, dC = E.derivative(), C.derivative()
    columns = []
    for j in range(n):
        u = Poly.monomial(1, j)
        columns.append((u.derivative() * E - u * dE) * C * k + u * dC * E)
    rhs_poly = N * C * E * k
    rows = max([c.degree for c in columns] + [rhs_poly.degree]) + 1
    matrix = [[col.coeff(i) for col in columns] for i in range(rows)]
    rhs = [rhs_poly.coeff(i) for i in range(rows)]
    return matrix, rhs, E


def solve_radical_ansatz(A, C: Poly, k: int) -> Optional[RatFunc]:
    """Rational ``p`` with ``p' C + p C'/k = A C``, or None."""
    p, _ = _solve_ansatz(as_ratfunc(A), C, k)
    return p


def _solve_ansatz(A: RatFunc, C: Poly, k: int):
    if C.degree <= 0:
        raise ValueError("the ansatz needs a nonconstant radicand")
    if A.is_zero:
        raise ValueError("zero integrand")
    matrix, rhs, E = _ansatz_system(A, C, k)
    sol, rank = solve_linear(matrix, rhs)
    dims = AnsatzInsolvable(len(matrix[0]), len(matrix), rank)
    if sol is None:
        return None, dims
    return RatFunc(Poly(sol), E), dims


def ansatz_kernel_is_trivial(A, C: Poly, k: int) -> bool:
    """Full column rank of the ansatz system, i.e. uniqueness of p."""
    matrix, _, _ = _ansatz_system(as_ratfunc(A), C, k)
    _, rank = solve_linear(matrix, [Fraction(0)] * len(matrix))
    return rank == len(matrix[0])


def rectify(d: KDifferential) -> RectificationVerdict:
    """Decide exactness of the canonical k-cover of ``d``.

    On success the primitive ``g`` of a branch of ``d**(1/k)`` is returned with
    ``f = g**k / k**k``, which satisfies ``d = f (df/f)**k`` over Q.
    """
    k = d.k
    c, A, C = decompose_radicand(d.coeff, k)
    if C.degree <= 0:
        P, rem = hermite_reduce(A)
        if not rem.is_zero:
            return NotExact(ResidueObstruction(rem.den, rem))
        p, radicand = P, ONE
    else:
        p, dims = _solve_ansatz(A, C, k)
        if p is None:
            return NotExact(dims)
        radicand = C
    primitive = RadicalPrimitive(p, radicand, k, Fraction(c))
    f = c * p ** k * RatFunc(radicand) / Fraction(k) ** k
    return Exact(primitive, f, k)


def build_from_f(f, k: int) -> KDifferential:
    """The k-differential ``f (df/f)**k = f'**k / f**(k-1)``."""
    f = as_ratfunc(f)
    if f.is_constant:
        raise ValueError("f must be nonconstant")
    df = f.derivative()
    return KDifferential(k, df ** k / f ** (k - 1))
