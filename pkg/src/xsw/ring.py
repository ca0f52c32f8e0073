"""Fast angular coefficient ring used by the operator engine.

A coefficient is (ev(x) + od(x)*s) / (den * (1-x)^e1 * (1+x)^e2 * (pb-qb*x)^e3)
with integer numerator polynomials, an integer denominator and tracked powers
of the three linear factors that actually occur in this problem ((1-x), (1+x)
and (b-x) where b = pb/qb is the potential's pole). Multiplication is plain
integer convolution; reduction is trial division at the known roots, so no
general gcd ever runs in the hot path.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .exact import F, Poly, RatFn, TrigRat, DEGREE_CAP, DegreeOverflowError


def iconv(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def itrim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    del a[n:]
    return a


def iadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return itrim(out)


def iscale(a, k):
    return [c * k for c in a]


def ideriv(a):
    return [i * c for i, c in enumerate(a)][1:]


def icontent(*lists):
    g = 0
    for a in lists:
        for c in a:
            g = math.gcd(g, abs(c) if isinstance(c, int) else abs(int(c)))
            if g == 1:
                return 1
    return g


def idiv_linear(a, p0, p1):
    """Exact division of int poly a by (p0 + p1*x); returns (quot_ints, den) or None.

    The quotient over Q has denominators dividing p1^deg; returned as integer
    list plus the positive integer denominator that was cleared.
    """
    if not a:
        return [], 1
    n = len(a) - 1
    q = [F(0)] * n
    rem = F(a[n])
    # synthetic division from the top: a = (p0 + p1 x) * q + rem0
    for i in range(n - 1, -1, -1):
        q[i] = rem / p1
        rem = F(a[i]) - q[i] * p0
    if rem != 0:
        return None
    den = 1
    for c in q:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in q], den


class RingCtx:
    """Parameter context: the pole location b = pb/qb of the deformation."""

    __slots__ = ("pb", "qb")

    def __init__(self, b: Fraction):
        b = F(b)
        self.pb = b.numerator
        self.qb = b.denominator

    def __eq__(self, other):
        return self.pb == other.pb and self.qb == other.qb

    # linear factors as integer (const, lin) pairs
    @property
    def f1(self):
        return (1, -1)       # 1 - x

    @property
    def f2(self):
        return (1, 1)        # 1 + x

    @property
    def f3(self):
        return (self.pb, -self.qb)   # pb - qb*x  (= qb*(b - x))


_S2POLY = [1, 0, -1]   # 1 - x^2 = f1*f2


class Coef:
    """One angular coefficient in the factored-denominator ring."""

    __slots__ = ("ctx", "ev", "od", "den", "e1", "e2", "e3")

    def __init__(self, ctx, ev, od, den=1, e1=0, e2=0, e3=0, reduce=True):
        self.ctx = ctx
        self.ev = itrim(list(ev))
        self.od = itrim(list(od))
        if den == 0:
            raise ZeroDivisionError("zero denominator in ring coefficient")
        if den < 0:
            den = -den
            self.ev = iscale(self.ev, -1)
            self.od = iscale(self.od, -1)
        self.den = den
        self.e1, self.e2, self.e3 = e1, e2, e3
        if max(len(self.ev), len(self.od)) > DEGREE_CAP:
            raise DegreeOverflowError("ring numerator degree exceeds cap")
        if reduce:
            self._reduce()

    # ---- constructors -------------------------------------------------
    @staticmethod
    def zero(ctx):
        return Coef(ctx, [], [], reduce=False)

    @staticmethod
    def const(ctx, c):
        c = F(c)
        return Coef(ctx, [c.numerator], [], c.denominator, reduce=False)

    @staticmethod
    def xpoly(ctx, fr_coeffs, odd=False):
        """From Fraction coefficients in x (even part, or odd part if odd=True)."""
        den = 1
        for c in fr_coeffs:
            c = F(c)
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(F(c) * den) for c in fr_coeffs]
        return Coef(ctx, [] if odd else ints, ints if odd else [], den)

    @staticmethod
    def from_trigrat(ctx, t: TrigRat):
        """Convert a TrigRat whose denominators factor over {1-x, 1+x, b-x}."""
        def part(rf: RatFn, odd: bool) -> "Coef":
            if rf.is_zero():
                return Coef.zero(ctx)
            num_ints, num_den = _to_int(rf.num)
            den_ints, den_den = _to_int(rf.den)
            exps = [0, 0, 0]
            q_acc = 1
            rest = den_ints
            for idx, fac in enumerate((ctx.f1, ctx.f2, ctx.f3)):
                while len(rest) > 1:
                    q = idiv_linear(rest, *fac)
                    if q is None:
                        break
                    rest, d = q
                    q_acc *= d
                    exps[idx] += 1
            if len(rest) != 1:
                raise ValueError("denominator has factors outside {1-x, 1+x, b-x}")
            ints = iscale(num_ints, den_den * q_acc)
            den = num_den * rest[0]
            return Coef(ctx, [] if odd else ints, ints if odd else [], den, *exps)
        return part(t.even, False) + part(t.odd, True)

    # ---- structure ----------------------------------------------------
    def is_zero(self):
        return not self.ev and not self.od

    def copy_exps(self):
        return (self.e1, self.e2, self.e3)

    def _reduce(self):
        if self.is_zero():
            self.den, self.e1, self.e2, self.e3 = 1, 0, 0, 0
            return
        ctx = self.ctx
        for attr, fac in (("e1", ctx.f1), ("e2", ctx.f2), ("e3", ctx.f3)):
            while getattr(self, attr) > 0:
                qe = idiv_linear(self.ev, *fac) if self.ev else ([], 1)
                qo = idiv_linear(self.od, *fac) if self.od else ([], 1)
                if qe is None or qo is None:
                    break
                l = qe[1] * qo[1] // math.gcd(qe[1], qo[1])
                self.ev = iscale(qe[0], l // qe[1])
                self.od = iscale(qo[0], l // qo[1])
                self.den *= l
                setattr(self, attr, getattr(self, attr) - 1)
        g = math.gcd(icontent(self.ev, self.od), self.den)
        if g > 1:
            self.ev = [c // g for c in self.ev]
            self.od = [c // g for c in self.od]
            self.den //= g

    # ---- arithmetic ----------------------------------------------------
    def _aligned(self, other):
        """Bring two coefficients to common exponents/denominator; returns int lists."""
        ctx = self.ctx
        e1, e2, e3 = (max(self.e1, other.e1), max(self.e2, other.e2),
                      max(self.e3, other.e3))
        def lift(c):
            ev, od = c.ev, c.od
            for fac, d in ((ctx.f1, e1 - c.e1), (ctx.f2, e2 - c.e2),
                           (ctx.f3, e3 - c.e3)):
                for _ in range(d):
                    ev = iconv(ev, list(fac))
                    od = iconv(od, list(fac))
            return ev, od
        ev_a, od_a = lift(self)
        ev_b, od_b = lift(other)
        den = self.den * other.den // math.gcd(self.den, other.den)
        ka, kb = den // self.den, den // other.den
        return (iscale(ev_a, ka), iscale(od_a, ka),
                iscale(ev_b, kb), iscale(od_b, kb), den, e1, e2, e3)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        ev_a, od_a, ev_b, od_b, den, e1, e2, e3 = self._aligned(other)
        return Coef(self.ctx, iadd(ev_a, ev_b), iadd(od_a, od_b), den, e1, e2, e3)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Coef(self.ctx, iscale(self.ev, -1), iscale(self.od, -1),
                    self.den, self.e1, self.e2, self.e3, reduce=False)

    def __mul__(self, other):
        if isinstance(other, (int, F)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Coef.zero(self.ctx)
        ev = iadd(iconv(self.ev, other.ev),
                  iconv(iconv(self.od, other.od), _S2POLY))
        od = iadd(iconv(self.ev, other.od), iconv(self.od, other.ev))
        return Coef(self.ctx, ev, od, self.den * other.den,
                    self.e1 + other.e1, self.e2 + other.e2, self.e3 + other.e3)

    def scale(self, k):
        if self.is_zero():
            return self
        k = F(k)
        return Coef(self.ctx, iscale(self.ev, k.numerator),
                    iscale(self.od, k.numerator),
                    self.den * k.denominator,
                    self.e1, self.e2, self.e3,
                    reduce=(k.denominator != 1))

    def _dx_num(self, num):
        """d/dx of num/(den * f1^e1 f2^e2 f3^e3): numerator at exponents e+1."""
        ctx = self.ctx
        f1, f2, f3 = list(ctx.f1), list(ctx.f2), list(ctx.f3)
        f23 = iconv(f2, f3)
        f13 = iconv(f1, f3)
        f12 = iconv(f1, f2)
        out = iconv(ideriv(num), iconv(f1, f23))
        # - e1 f1'/f1 - e2 f2'/f2 - e3 f3'/f3  with f1'=-1, f2'=1, f3'=-qb
        if self.e1:
            out = iadd(out, iscale(iconv(num, f23), self.e1))
        if self.e2:
            out = iadd(out, iscale(iconv(num, f13), -self.e2))
        if self.e3:
            out = iadd(out, iscale(iconv(num, f12), self.e3 * ctx.qb))
        return out

    def dphi(self):
        """d/dphi: for A + B s, returns (2(1-x^2)B' - 2xB) + (2A') s."""
        if self.is_zero():
            return self
        ctx = self.ctx
        f123 = iconv(iconv(list(ctx.f1), list(ctx.f2)), list(ctx.f3))
        dA = self._dx_num(self.ev)      # exponents e+1
        dB = self._dx_num(self.od)
        # even part: 2(1-x^2) B' - 2x B   (align -2xB to exponents e+1)
        ev = iadd(iscale(iconv(dB, _S2POLY), 2),
                  iscale(iconv(iconv([0, 1], self.od), f123), -2))
        od = iscale(dA, 2)
        return Coef(ctx, ev, od, self.den,
                    self.e1 + 1, self.e2 + 1, self.e3 + 1)

    # ---- conversions / evaluation ---------------------------------------
    def _den_ratfn(self):
        ctx = self.ctx
        d = Poly.const(self.den)
        for fac, e in ((ctx.f1, self.e1), (ctx.f2, self.e2), (ctx.f3, self.e3)):
            d = d * Poly((F(fac[0]), F(fac[1]))) ** e
        return d

    def to_trigrat(self) -> TrigRat:
        d = self._den_ratfn()
        return TrigRat(RatFn(Poly([F(c) for c in self.ev]), d),
                       RatFn(Poly([F(c) for c in self.od]), d))

    def eval(self, x0, s0):
        """Exact evaluation at (x0, s0) with Fractions (or floats)."""
        ctx = self.ctx
        den = self.den
        dv = (F(den) * (1 - x0) ** self.e1 * (1 + x0) ** self.e2
              * (ctx.pb - ctx.qb * x0) ** self.e3) if isinstance(x0, F) else (
            float(den) * (1 - x0) ** self.e1 * (1 + x0) ** self.e2
            * (ctx.pb - ctx.qb * x0) ** self.e3)
        def ev_poly(ints):
            acc = F(0) if isinstance(x0, F) else 0.0
            for c in reversed(ints):
                acc = acc * x0 + c
            return acc
        return (ev_poly(self.ev) + ev_poly(self.od) * s0) / dv

    def __eq__(self, other):
        return (self - other).is_zero()

    def __repr__(self):
        def fmt(ints):
            if not ints:
                return "0"
            return "+".join(f"{c}x^{i}" if i else f"{c}"
                            for i, c in enumerate(ints) if c)
        den = f"{self.den}"
        if self.e1:
            den += f"*(1-x)^{self.e1}"
        if self.e2:
            den += f"*(1+x)^{self.e2}"
        if self.e3:
            den += f"*({self.ctx.pb}-{self.ctx.qb}x)^{self.e3}"
        return f"[({fmt(self.ev)}) + ({fmt(self.od)})s]/({den})"


def _to_int(p: Poly):
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs], den
