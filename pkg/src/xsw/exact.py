"""Exact scalar and polynomial arithmetic.

Scalars are `fractions.Fraction` throughout. A polynomial is a tuple of
Fraction coefficients starting with the constant term; the zero polynomial is
the empty tuple and has degree -1. Rational functions are kept reduced with a
monic denominator. `TrigRat` is the quadratic extension Q(x)[s]/(s^2 - (1-x^2))
that makes every trigonometric coefficient in this problem exactly
representable via x = -cos(2*phi), s = sin(2*phi).
"""
from __future__ import annotations

import math
from fractions import Fraction

F = Fraction

DEGREE_CAP = 4096  # blowup guard for the operator computations


class DegreeOverflowError(RuntimeError):
    """Raised when a polynomial exceeds DEGREE_CAP (silent blowup guard)."""


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial over Fraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([F(c) for c in coeffs])
        if len(self.coeffs) > DEGREE_CAP:
            raise DegreeOverflowError(f"degree {len(self.coeffs) - 1} exceeds cap")

    @staticmethod
    def const(c) -> "Poly":
        return Poly((F(c),))

    @staticmethod
    def x() -> "Poly":
        return Poly((F(0), F(1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, F)):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [F(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if self.is_zero():
            return self
        return Poly((F(0),) * k + self.coeffs)

    def deriv(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integ(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly([F(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def eval(self, v):
        acc = F(0) if isinstance(v, (int, F)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * v + (c if isinstance(v, (int, F)) else float(c))
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return Poly([c / lc for c in self.coeffs])

    def divmod(self, d: "Poly"):
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = []
        r = list(self.coeffs)
        dd, dlc = d.degree, d.coeffs[-1]
        while len(r) - 1 >= dd and any(r):
            while r and not r[-1]:
                r.pop()
            if len(r) - 1 < dd:
                break
            t = r[-1] / dlc
            q.append(t)
            off = len(r) - 1 - dd
            for i, c in enumerate(d.coeffs):
                r[off + i] -= t * c
            r.pop()
        q.reverse()
        return Poly(q), Poly(r)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*x^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(parts) + ")"


def _int_content(ints):
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
        if g == 1:
            return 1
    return g or 1


def _to_int_poly(p: Poly):
    """Clear denominators: returns (list of ints, common denominator)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs], den


def _int_prim(v):
    g = _int_content(v)
    return [c // g for c in v]


def _int_pseudo_rem(u, v):
    """Pseudo-remainder of int polys u by v (v nonzero, trimmed)."""
    r = list(u)
    dv = len(v) - 1
    lc = v[-1]
    while len(r) - 1 >= dv:
        if r[-1] == 0:
            r.pop()
            continue
        top = r[-1]
        r = [c * lc for c in r]
        off = len(r) - 1 - dv
        for i, c in enumerate(v):
            r[off + i] -= top * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via a primitive polynomial remainder sequence over Z."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    u, _ = _to_int_poly(a)
    v, _ = _to_int_poly(b)
    u, v = _int_prim(u), _int_prim(v)
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _int_pseudo_rem(u, v)
        if not r:
            return Poly(v).monic()
        u, v = v, _int_prim(r)
    return Poly(u).monic()


class RatFn:
    """Reduced rational function num/den with monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None, _reduced=False):
        den = Poly.const(1) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in rational function")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, _ = num.divmod(g)
                    den, _ = den.divmod(g)
            lc = den.coeffs[-1]
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        self.num = num
        self.den = den

    @staticmethod
    def const(c) -> "RatFn":
        return RatFn(Poly.const(c))

    @staticmethod
    def x() -> "RatFn":
        return RatFn(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return RatFn(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFn(-self.num, self.den, _reduced=True)

    def __mul__(self, other):
        if isinstance(other, (int, F)):
            return RatFn(self.num * other, self.den)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, F)):
            return RatFn(self.num, self.den * F(other))
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def deriv(self) -> "RatFn":
        return RatFn(self.num.deriv() * self.den - self.num * self.den.deriv(),
                     self.den * self.den)

    def eval(self, v):
        dv = self.den.eval(v)
        if dv == 0:
            raise ZeroDivisionError("pole of a rational function")
        return self.num.eval(v) / dv

    def __repr__(self):
        return f"RatFn({self.num!r} / {self.den!r})"


def ratfn_normalize(num: Poly, den: Poly) -> RatFn:
    """Reduced rational function num/den (monic denominator)."""
    return RatFn(num, den)


class TrigRat:
    """Element even(x) + odd(x)*s of Q(x)[s]/(s^2 - (1-x^2)).

    Encodes trig functions of phi on the wedge (0, pi/2) through
    x = -cos(2*phi), s = sin(2*phi) >= 0.
    """

    __slots__ = ("even", "odd")

    def __init__(self, even: RatFn = None, odd: RatFn = None):
        self.even = RatFn.const(0) if even is None else even
        self.odd = RatFn.const(0) if odd is None else odd

    @staticmethod
    def const(c) -> "TrigRat":
        return TrigRat(RatFn.const(c))

    @staticmethod
    def x() -> "TrigRat":
        return TrigRat(RatFn.x())

    @staticmethod
    def s() -> "TrigRat":
        return TrigRat(odd=RatFn.const(1))

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __eq__(self, other):
        return self.even == other.even and self.odd == other.odd

    def __add__(self, other):
        return TrigRat(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        return TrigRat(self.even - other.even, self.odd - other.odd)

    def __neg__(self):
        return TrigRat(-self.even, -self.odd)

    def __mul__(self, other):
        if isinstance(other, (int, F)):
            return TrigRat(self.even * other, self.odd * other)
        s2 = RatFn(Poly((F(1), F(0), F(-1))))  # 1 - x^2
        return TrigRat(self.even * other.even + self.odd * other.odd * s2,
                       self.even * other.odd + self.odd * other.even)

    __rmul__ = __mul__

    def inverse(self) -> "TrigRat":
        s2 = RatFn(Poly((F(1), F(0), F(-1))))
        n = self.even * self.even - self.odd * self.odd * s2
        if n.is_zero():
            raise ZeroDivisionError("non-invertible TrigRat element")
        return TrigRat(self.even / n, -self.odd / n)

    def __truediv__(self, other):
        if isinstance(other, (int, F)):
            return TrigRat(self.even / other, self.odd / other)
        return self * other.inverse()

    def dphi(self) -> "TrigRat":
        """d/dphi under x = -cos(2 phi), s = sin(2 phi)."""
        s2 = RatFn(Poly((F(1), F(0), F(-1))))
        xf = RatFn.x()
        return TrigRat(s2 * self.odd.deriv() * 2 - xf * self.odd * 2,
                       self.even.deriv() * 2)

    def eval(self, x0, s0):
        """Evaluate at concrete (x, s); exact when inputs are Fractions."""
        return self.even.eval(x0) + self.odd.eval(x0) * s0

    def eval_phi(self, phi: float) -> float:
        return float(self.eval(-math.cos(2 * phi), math.sin(2 * phi)))

    def __repr__(self):
        return f"TrigRat({self.even!r} + ({self.odd!r})*s)"
