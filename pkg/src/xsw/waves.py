"""Quasi-polynomial wavefunctions and operator application.

A `QuasiPoly` is a separable product

    radial  = r^C * exp(-omega r^2 / 2)^g * P(y),    y = omega r^2
    angular = (1-x)^p (1+x)^q (x-b)^k * Q(x) * s^sigma

with rational exponents C, p, q, integer k and sigma in {0, 1}. Operators map
single products to sums of products (`WaveSum`); sums compare through a
canonical bivariate form over a common gauge, absorbing s via
s = (1-x)^(1/2) (1+x)^(1/2) on the open wedge.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import F, Poly
from .ring import Coef


class NonClosureError(ValueError):
    """An operator left the quasi-polynomial family (exponent misalignment)."""


_HALF = F(1, 2)


def _poly_div_exact(p: Poly, d: Poly, what: str) -> Poly:
    q, r = p.divmod(d)
    if not r.is_zero():
        raise NonClosureError(f"non-polynomial remainder while dividing by {what}")
    return q


class QuasiPoly:
    """One separable product term. Immutable by convention."""

    __slots__ = ("omega", "C", "gaussian", "rpoly", "b", "p", "q", "k",
                 "xpoly", "sparity")

    def __init__(self, omega, C, gaussian, rpoly: Poly, b, p, q, k,
                 xpoly: Poly, sparity=0):
        self.omega = F(omega)
        self.C = F(C)
        self.gaussian = bool(gaussian)
        self.rpoly = rpoly
        self.b = F(b)
        self.p = F(p)
        self.q = F(q)
        self.k = int(k)
        self.xpoly = xpoly
        self.sparity = int(sparity) & 1
        self._normalize()

    def _normalize(self):
        # absorb s parity into half-integer exponents (s >= 0 on the wedge)
        if self.sparity:
            self.p += _HALF
            self.q += _HALF
            self.sparity = 0
        # strip known linear factors out of the polynomial parts
        if not self.xpoly.is_zero():
            for root_poly, bump in ((Poly((F(1), F(-1))), "p"),
                                    (Poly((F(1), F(1))), "q"),
                                    (Poly((-self.b, F(1))), "k")):
                while self.xpoly.degree > 0:
                    qq, rr = self.xpoly.divmod(root_poly)
                    if not rr.is_zero():
                        break
                    self.xpoly = qq
                    setattr(self, bump, getattr(self, bump) + 1)

    def is_zero(self):
        return self.rpoly.is_zero() or self.xpoly.is_zero()

    # ---- operator primitives -------------------------------------------
    def dr(self) -> "QuasiPoly":
        """d/dr: C -> C-1, P -> C P + 2 y P' (- y P if gaussian)."""
        P = self.rpoly
        y = Poly.x()
        newP = P * self.C + y * P.deriv() * 2
        if self.gaussian:
            newP = newP - y * P
        return QuasiPoly(self.omega, self.C - 1, self.gaussian, newP,
                         self.b, self.p, self.q, self.k, self.xpoly, self.sparity)

    def dphi(self) -> "QuasiPoly":
        """d/dphi via x = -cos(2 phi): 2 s d/dx on the angular part."""
        Q = self.xpoly
        one_m = Poly((F(1), F(-1)))
        one_p = Poly((F(1), F(1)))
        xmb = Poly((-self.b, F(1)))
        bracket = (one_p * xmb * Q * (-self.p) + one_m * xmb * Q * self.q
                   + one_m * one_p * Q * self.k + one_m * one_p * xmb * Q.deriv())
        return QuasiPoly(self.omega, self.C, self.gaussian, self.rpoly, self.b,
                         self.p - 1, self.q - 1, self.k - 1, bracket * 2,
                         self.sparity + 1)

    def mul_rpow(self, m: int) -> "QuasiPoly":
        return QuasiPoly(self.omega, self.C + m, self.gaussian, self.rpoly,
                         self.b, self.p, self.q, self.k, self.xpoly, self.sparity)

    def mul_coef(self, c: Coef) -> "WaveSum":
        """Multiply by an angular ring coefficient."""
        parts = []
        den_scale = F(c.den) * F(-c.ctx.qb) ** c.e3
        for ints, par in ((c.ev, 0), (c.od, 1)):
            if not ints:
                continue
            num = Poly([F(v) for v in ints])
            parts.append(QuasiPoly(
                self.omega, self.C, self.gaussian, self.rpoly, self.b,
                self.p - c.e1, self.q - c.e2, self.k - c.e3,
                self.xpoly * num * (1 / den_scale),
                self.sparity + par))
        return WaveSum(parts)

    def scale(self, k) -> "QuasiPoly":
        return QuasiPoly(self.omega, self.C, self.gaussian, self.rpoly * F(k),
                         self.b, self.p, self.q, self.k, self.xpoly, self.sparity)

    def eval(self, r0: float, phi0: float) -> float:
        import math
        y = float(self.omega) * r0 * r0
        x = -math.cos(2 * phi0)
        rad = r0 ** float(self.C) * self.rpoly.eval(y)
        if self.gaussian:
            rad *= math.exp(-y / 2)
        ang = ((1 - x) ** float(self.p) * (1 + x) ** float(self.q)
               * (x - float(self.b)) ** self.k * self.xpoly.eval(x))
        return rad * ang

    def __repr__(self):
        return (f"QuasiPoly(r^{self.C}{'*e^(-y/2)' if self.gaussian else ''}"
                f"*{self.rpoly!r}; (1-x)^{self.p}(1+x)^{self.q}(x-b)^{self.k}"
                f"*{self.xpoly!r})")


class WaveSum:
    """A finite sum of QuasiPoly products over the same (omega, b, gaussian)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = [t for t in parts if not t.is_zero()]

    @staticmethod
    def of(term: QuasiPoly) -> "WaveSum":
        return WaveSum([term])

    def __add__(self, other):
        return WaveSum(self.parts + other.parts)

    def scale(self, k) -> "WaveSum":
        return WaveSum([t.scale(k) for t in self.parts])

    def is_zero(self):
        return not self.canonical()[4]

    def canonical(self):
        """(C0, p0, q0, k0, {(ydeg, xdeg): Fraction}) over the common gauge."""
        if not self.parts:
            return (F(0), F(0), F(0), 0, {})
        C0 = min(t.C for t in self.parts)
        p0 = min(t.p for t in self.parts)
        q0 = min(t.q for t in self.parts)
        k0 = min(t.k for t in self.parts)
        table = {}
        for t in self.parts:
            dC = t.C - C0
            if dC.denominator != 1 or int(dC) % 2:
                raise NonClosureError(f"radial exponent mismatch: {t.C} vs {C0}")
            dp, dq, dk = t.p - p0, t.q - q0, t.k - k0
            if dp.denominator != 1 or dq.denominator != 1:
                raise NonClosureError("angular exponent mismatch "
                                      f"({t.p},{t.q}) vs ({p0},{q0})")
            ylift = int(dC) // 2
            rp = t.rpoly.shift(ylift) * (F(1) / t.omega) ** ylift
            xp = (t.xpoly * Poly((F(1), F(-1))) ** int(dp)
                  * Poly((F(1), F(1))) ** int(dq)
                  * Poly((-t.b, F(1))) ** int(dk))
            for i, ci in enumerate(rp.coeffs):
                if not ci:
                    continue
                for j, cj in enumerate(xp.coeffs):
                    if not cj:
                        continue
                    key = (i, j)
                    v = table.get(key, F(0)) + ci * cj
                    if v:
                        table[key] = v
                    else:
                        table.pop(key, None)
        return (C0, p0, q0, k0, table)

    def equals(self, other: "WaveSum") -> bool:
        return (self + other.scale(F(-1))).is_zero()

    def eval(self, r0, phi0):
        return sum(t.eval(r0, phi0) for t in self.parts)


def op_apply(op, f) -> WaveSum:
    """Apply a normal-ordered Op2D to a QuasiPoly or WaveSum exactly."""
    terms = f.parts if isinstance(f, WaveSum) else [f]
    out = []
    for t in terms:
        # cache of d_phi^j then d_r^i applications
        for (i, j), lau in op.terms.items():
            base = t
            for _ in range(j):
                base = base.dphi()
            for _ in range(i):
                base = base.dr()
            for m, c in lau.items():
                out.extend(base.mul_rpow(m).mul_coef(c).parts)
    return WaveSum(out)
