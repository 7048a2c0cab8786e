"""Exact arithmetic over Q and Q(i).

Univariate polynomials and rational functions in the parameter ``t``, the
Gaussian rationals, and the radical extension rings Q(t)[r]/(r^k - c*C) in
which arc-length primitives, unit tangents and involutes live.

Coefficients are :class:`fractions.Fraction` or :class:`GaussianRational`.
A Gaussian coefficient with zero imaginary part is demoted to a Fraction on
construction, so a polynomial over Q(i) that happens to be real compares equal
to the same polynomial over Q.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def lift(x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return NotImplemented

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self ** -n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = GaussianRational.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*i)"


I = GaussianRational(0, 1)


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, GaussianRational):
        return c.re if c.im == 0 else c
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def conj_scalar(c):
    return c.conjugate() if isinstance(c, GaussianRational) else c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational))


class Poly:
    """Dense univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def t(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c, n: int) -> Poly:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_real(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def coeff(self, n: int):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            return Poly([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        inv = 1 / o.lc if isinstance(o.lc, Fraction) else GaussianRational(1) / o.lc
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c * inv
            quot[i - db] = f
            for j, bc in enumerate(o.coeffs):
                rem[i - db + j] = rem[i - db + j] - f * bc
        return Poly(quot), Poly(rem[:db] if db > 0 else ())

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        inv = GaussianRational(1) / other if isinstance(other, GaussianRational) else 1 / Fraction(other)
        return self * inv

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integral(self) -> Poly:
        """Antiderivative with zero constant term."""
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = GaussianRational(1) / lc if isinstance(lc, GaussianRational) else 1 / lc
        return self * inv

    def conj(self) -> Poly:
        return Poly([conj_scalar(c) for c in self.coeffs])

    def real_part(self) -> Poly:
        return Poly([c.re if isinstance(c, GaussianRational) else c for c in self.coeffs])

    def imag_part(self) -> Poly:
        return Poly([c.im if isinstance(c, GaussianRational) else 0 for c in self.coeffs])

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self.to_str()!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "t") -> str:
        """Render in the expression grammar (descending degree, explicit ``*``)."""
        if self.is_zero:
            return "0"
        pieces = []
        for n in range(self.degree, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            if isinstance(c, GaussianRational):
                if c.re == 0:
                    sign = "-" if c.im < 0 else "+"
                    mag = "i" if abs(c.im) == 1 else f"{abs(c.im)}*i"
                else:
                    sign, mag = "+", str(c)
            else:
                sign, mag = ("-", str(-c)) if c < 0 else ("+", str(c))
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
            if not mono:
                term = mag
            elif mag == "1":
                term = mono
            else:
                term = f"{mag}*{mono}"
            pieces.append((sign, term))
        first_sign, first = pieces[0]
        out = ("-" + first) if first_sign == "-" else first
        for sign, term in pieces[1:]:
            out += f" {sign} {term}"
        return out


T = Poly.t()
ONE = Poly((1,))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_real and q.is_real:
        return _primitive_gcd(p, q)
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def _primitive_part(coeffs: list[int]) -> list[int]:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    return [c // g for c in coeffs] if g > 1 else coeffs


def _integer_coeffs(p: Poly) -> list[int]:
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return _primitive_part([int(c * lcm) for c in p.coeffs])


def _primitive_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive pseudo-remainder sequence over Z; keeps coefficients small."""
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a, b = _integer_coeffs(p), _integer_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and any(r):
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [c * lb for c in r]
            for j, bc in enumerate(b):
                r[shift + j] -= lr * bc
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        if not r:
            return Poly(b).monic()
        a, b = b, _primitive_part(r)
    return ONE


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, u)`` with ``s*a + u*b = g`` and ``g`` monic."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = a, b
    s0, s1 = ONE, Poly()
    u0, u1 = Poly(), ONE
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    lc = r0.lc
    inv = GaussianRational(1) / lc if isinstance(lc, GaussianRational) else 1 / lc
    return r0 * inv, s0 * inv, u0 * inv


def solve_bezout(a: Poly, b: Poly, c: Poly) -> tuple[Poly, Poly]:
    """Solve ``s*a + u*b = c`` with ``deg s < deg b``; requires gcd(a, b) | c."""
    g, s, u = poly_xgcd(a, b)
    q, r = divmod(c, g)
    if not r.is_zero:
        raise ArithmeticError("c is not in the ideal (a, b)")
    s = s * q
    if b.degree > 0:
        s = s % b
    u = (c - s * a).exact_div(b)
    return s, u


def squarefree_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's squarefree decomposition.

    Returns ``[(f_1, m_1), ...]`` with ``p = lc(p) * prod f_i**m_i``; the
    factors are monic, squarefree and pairwise coprime, and the multiplicities
    strictly increase.
    """
    if p.is_zero:
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = p.monic()
    if f.degree <= 0:
        return []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    out = ONE
    for f, _ in squarefree_decompose(p):
        out = out * f
    return out


def count_real_roots(p: Poly) -> int:
    """Number of distinct real roots of a real polynomial (Sturm sequence)."""
    if not p.is_real:
        raise ValueError("Sturm count requires rational coefficients")
    if p.is_zero:
        raise ValueError("zero polynomial has infinitely many roots")
    if p.degree <= 0:
        return 0
    p = squarefree_part(p)
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero:
            break
        seq.append(-r)

    def variations(signs):
        s = [x for x in signs if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if a != b)

    at_pos = [1 if q.lc > 0 else -1 for q in seq]
    at_neg = [(1 if q.lc > 0 else -1) * (-1 if q.degree % 2 else 1) for q in seq]
    return variations(at_neg) - variations(at_pos)


def poly_multiplicity(p: Poly, f: Poly) -> int:
    """Largest m with f**m dividing p (f nonconstant, p nonzero)."""
    if f.degree <= 0:
        raise ValueError("multiplicity needs a nonconstant factor")
    m = 0
    while True:
        q, r = divmod(p, f)
        if not r.is_zero:
            return m
        p = q
        m += 1


class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        num = _as_poly(num if num is not None else 0)
        den = _as_poly(den if den is not None else 1)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly(), ONE
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            inv = GaussianRational(1) / lc if isinstance(lc, GaussianRational) else 1 / lc
            num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def t(cls) -> RatFunc:
        return cls(T)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    @property
    def is_real(self) -> bool:
        return self.num.is_real and self.den.is_real

    def constant_value(self):
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    @property
    def degree(self) -> int:
        """deg num - deg den (the order of the pole at infinity)."""
        return self.num.degree - self.den.degree

    def __add__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RatFunc._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den.exact_div(g), o.den.exact_div(g)
        # only factors of g can cancel
        return RatFunc(self.num * d2 + o.num * d1, d1 * d2 * g)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return RatFunc()
            return RatFunc._raw(self.num * other, self.den)
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        if self.is_zero or o.is_zero:
            return RatFunc()
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = self.num.exact_div(g1) * o.num.exact_div(g2)
        den = self.den.exact_div(g2) * o.den.exact_div(g1)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatFunc(self.den ** -n, self.num ** -n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def derivative(self) -> RatFunc:
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def compose(self, g: RatFunc) -> RatFunc:
        """``self(g(t))``."""
        g = _as_ratfunc(g)
        return _as_ratfunc(self.num(g)) / _as_ratfunc(self.den(g))

    def conj(self) -> RatFunc:
        return RatFunc._raw(self.num.conj(), self.den.conj())

    def real_part(self) -> RatFunc:
        """``(f + conj f)/2``, the real part on the real line."""
        return _to_real((self + self.conj()) * Fraction(1, 2))

    def imag_part(self) -> RatFunc:
        """``(f - conj f)/(2i)``."""
        return _to_real((self - self.conj()) * GaussianRational(0, Fraction(-1, 2)))

    def __eq__(self, other):
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.den == ONE:
            return self.num.to_str()
        n = self.num.to_str()
        if len(self.num.coeffs) > 1 or n.startswith("-"):
            n = f"({n})"
        d = self.den.to_str()
        if len(self.den.coeffs) > 1 or "/" in d:
            d = f"({d})"
        return f"{n}/{d}"


def _to_real(f: RatFunc) -> RatFunc:
    if not f.is_real:
        raise ArithmeticError(f"expected real coefficients in {f}")
    return f


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if _is_scalar(x):
        return Poly((x,))
    raise TypeError(f"cannot make a polynomial from {x!r}")


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc._raw(x, ONE)
    if _is_scalar(x):
        return RatFunc._raw(Poly((x,)), ONE)
    return NotImplemented


def as_ratfunc(x) -> RatFunc:
    out = _as_ratfunc(x)
    if out is NotImplemented:
        raise TypeError(f"cannot make a rational function from {x!r}")
    return out


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence):
    """Gauss-Jordan elimination over an exact field.

    Returns ``(solution, rank)``; ``solution`` is ``None`` when the system is
    inconsistent. Free variables are set to zero.
    """
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            return None, r
    zero = rhs[0] * 0 if rhs else Fraction(0)
    sol = [zero] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return sol, r


def integer_root(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    r = math.isqrt(n) if k == 2 else round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    # float guess can be off for huge n; fall back to bisection
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


_TRIAL_LIMIT = 10_000


def split_kth_power(value: Fraction, k: int) -> tuple[Fraction, Fraction]:
    """Write ``value = m**k * s`` with ``s`` an integer free of k-th powers.

    k-th powers are extracted by trial division up to 10^4 followed by an exact
    root test on the cofactor; a cofactor with two large prime factors may keep
    a hidden k-th power, in which case equal radicals can carry different tags.
    """
    value = Fraction(value)
    if value == 0:
        raise ValueError("zero scalar")
    sign = -1 if value < 0 else 1
    n = abs(value.numerator) * value.denominator ** (k - 1)
    m = Fraction(1, value.denominator)
    rest = 1
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            m *= p ** (e // k)
            rest *= p ** (e % k)
        p += 1 if p == 2 else 2
    root = integer_root(n, k)
    if root is not None:
        m *= root
    else:
        rest *= n
    if sign < 0 and k % 2 == 1:
        m, sign = -m, 1
    return m, Fraction(sign * rest)


def is_kth_power(value: Fraction, k: int) -> bool:
    return split_kth_power(value, k)[1] == 1


class RadicalElement:
    """Element ``sum_j parts[j] * (scalar*radicand)**(j/k)`` of Q(t)[r]/(r^k - scalar*radicand).

    ``radicand`` is monic and k-power-free; ``scalar`` is a formal rational
    tag, normalised so that it carries no rational k-th power. The radical is
    never evaluated exactly; :meth:`to_float` takes the real principal root.
    """

    __slots__ = ("parts", "radicand", "k", "scalar")

    def __init__(self, parts: Sequence, radicand: Poly, k: int, scalar=Fraction(1)):
        if k < 2:
            raise ValueError("root order must be at least 2")
        radicand = _as_poly(radicand)
        if radicand.is_zero:
            raise ValueError("zero radicand")
        if not radicand.is_real:
            raise ValueError("radicand must have rational coefficients")
        if any(m >= k for _, m in squarefree_decompose(radicand)):
            raise ValueError(f"radicand {radicand} is not {k}-power-free")
        scalar = Fraction(scalar) * radicand.lc
        radicand = radicand.monic()
        parts = [as_ratfunc(p) for p in parts]
        if len(parts) > k:
            raise ValueError("too many components for the root order")
        parts += [RatFunc()] * (k - len(parts))
        m, scalar = split_kth_power(scalar, k)
        if m != 1:
            parts = [p * m ** j for j, p in enumerate(parts)]
        self._set(tuple(parts), radicand, k, scalar)

    def _set(self, parts, radicand, k, scalar):
        if radicand == ONE and scalar == 1:
            total = RatFunc()
            for p in parts:
                total = total + p
            parts = (total,) + tuple(RatFunc() for _ in parts[1:])
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "scalar", scalar)

    def __setattr__(self, name, value):
        raise AttributeError("RadicalElement is immutable")

    def _like(self, parts) -> RadicalElement:
        obj = object.__new__(RadicalElement)
        obj._set(tuple(parts), self.radicand, self.k, self.scalar)
        return obj

    @classmethod
    def radical(cls, radicand: Poly, k: int) -> RadicalElement:
        """The element ``radicand**(1/k)`` itself."""
        return cls([RatFunc(), RatFunc(1)], radicand, k)

    @property
    def a(self) -> RatFunc:
        return self.parts[0]

    @property
    def b(self) -> RatFunc:
        return self.parts[1]

    @property
    def is_rational(self) -> bool:
        return all(p.is_zero for p in self.parts[1:])

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.parts)

    def zero(self) -> RadicalElement:
        return self._like([RatFunc()] * self.k)

    def one(self) -> RadicalElement:
        return self._like([RatFunc(1)] + [RatFunc()] * (self.k - 1))

    def _lift(self, other):
        if isinstance(other, RadicalElement):
            if (other.radicand, other.k, other.scalar) != (self.radicand, self.k, self.scalar):
                raise ValueError("radical elements over different extensions")
            return other
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return o
        return self._like([o] + [RatFunc()] * (self.k - 1))

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self._like([x + y for x, y in zip(self.parts, o.parts)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-x for x in self.parts])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        k = self.k
        rk = RatFunc(self.radicand * self.scalar)
        out = [RatFunc()] * k
        for i, x in enumerate(self.parts):
            if x.is_zero:
                continue
            for j, y in enumerate(o.parts):
                if y.is_zero:
                    continue
                term = x * y
                if i + j >= k:
                    out[i + j - k] = out[i + j - k] + term * rk
                else:
                    out[i + j] = out[i + j] + term
        return self._like(out)

    __rmul__ = __mul__

    def inverse(self) -> RadicalElement:
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero radical element")
        if self.is_rational:
            return self._like([1 / self.parts[0]] + [RatFunc()] * (self.k - 1))
        k = self.k
        basis = []
        for j in range(k):
            e = self._like([RatFunc(1) if i == j else RatFunc() for i in range(k)])
            basis.append((self * e).parts)
        # column j of the multiplication matrix is self * r^j
        matrix = [[basis[j][i] for j in range(k)] for i in range(k)]
        rhs = [RatFunc(1)] + [RatFunc()] * (k - 1)
        sol, rank = solve_linear(matrix, rhs)
        if sol is None or rank < k:
            raise ZeroDivisionError("radical element is a zero divisor")
        return self._like(sol)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** -n
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> RadicalElement:
        return radical_derivative(self)

    def __eq__(self, other):
        if isinstance(other, RadicalElement):
            return (self.parts, self.radicand, self.k, self.scalar) == (
                other.parts, other.radicand, other.k, other.scalar)
        o = _as_ratfunc(other)
        if o is NotImplemented:
            return NotImplemented
        return self.is_rational and self.parts[0] == o

    def __hash__(self):
        return hash((self.parts, self.radicand, self.k, self.scalar))

    def to_float(self, t: float) -> float:
        """Evaluate on the real branch of the radical at real ``t``."""
        base = float(self.scalar) * float(self.radicand(Fraction(t)))
        if base < 0 and self.k % 2 == 0:
            raise ValueError(f"radical is not real at t={t}")
        root = math.copysign(abs(base) ** (1.0 / self.k), base)
        return sum(float(p(Fraction(t))) * root ** j for j, p in enumerate(self.parts))

    def __repr__(self):
        return f"RadicalElement({self})"

    def __str__(self):
        rad = f"({self.scalar}*({self.radicand}))" if self.scalar != 1 else f"({self.radicand})"
        terms = []
        for j, p in enumerate(self.parts):
            if p.is_zero:
                continue
            terms.append(str(p) if j == 0 else f"({p})*{rad}^({j}/{self.k})")
        return " + ".join(terms) if terms else "0"


def radical_derivative(e: RadicalElement) -> RadicalElement:
    """d/dt of a radical element: ``(r^j)' = (j/k) * r^j * C'/C``."""
    log_d = RatFunc(e.radicand.derivative(), e.radicand)
    out = []
    for j, p in enumerate(e.parts):
        d = p.derivative()
        if j and not p.is_zero:
            d = d + p * log_d * Fraction(j, e.k)
        out.append(d)
    return e._like(out)
