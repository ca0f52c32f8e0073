"""Normal-ordered differential operators in (r, phi).

An operator is a map (i, j) -> Laurent polynomial in r whose coefficients live
in the angular ring (`ring.Coef`), representing  sum  c_{ijm} r^m d_r^i d_phi^j
with all coefficients to the left of all derivatives. Composition uses the
Leibniz rule (d_phi moved past angular coefficients via the ring derivation,
d_r past Laurent powers of r).
"""
from __future__ import annotations

import math
from fractions import Fraction

from .exact import F, TrigRat
from .ring import Coef, RingCtx


class LaurentR:
    """Finite Laurent polynomial in r with ring coefficients: {exponent: Coef}."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if not c.is_zero():
                    self.terms[m] = c

    @staticmethod
    def mono(ctx, m: int, c: Coef) -> "LaurentR":
        return LaurentR(ctx, {m: c})

    def is_zero(self):
        return not self.terms

    def scale_shift(self, k: int) -> "LaurentR":
        """Multiply by r^k: every exponent shifted by k, coefficients unchanged."""
        return LaurentR(self.ctx, {m + k: c for m, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            s = c if v is None else v + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return LaurentR(self.ctx, out)

    def __sub__(self, other):
        return self + other.scale(F(-1))

    def scale(self, k) -> "LaurentR":
        return LaurentR(self.ctx, {m: c.scale(k) for m, c in self.terms.items()})

    def mul_coef(self, c: Coef) -> "LaurentR":
        return LaurentR(self.ctx, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "LaurentR") -> "LaurentR":
        out = LaurentR(self.ctx)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out = out + LaurentR.mono(self.ctx, m1 + m2, c1 * c2)
        return out

    def dr(self) -> "LaurentR":
        return LaurentR(self.ctx,
                        {m - 1: c.scale(m) for m, c in self.terms.items() if m})

    def dphi(self) -> "LaurentR":
        return LaurentR(self.ctx, {m: c.dphi() for m, c in self.terms.items()})

    def eval(self, r0, x0, s0):
        return sum(c.eval(x0, s0) * r0 ** m for m, c in self.terms.items())

    def __eq__(self, other):
        return (self - other).is_zero()

    def __repr__(self):
        return "LaurentR(" + ", ".join(f"r^{m}: {c!r}"
                                       for m, c in sorted(self.terms.items())) + ")"


def _binom(n, k):
    return math.comb(n, k)


def _falling(m, k):
    out = 1
    for t in range(k):
        out *= (m - t)
    return out


class Op2D:
    """Normal-ordered operator: {(i, j): {r-exponent: Coef}}."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RingCtx, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            for key, lau in terms.items():
                self._put(key, lau)

    def _put(self, key, lau):
        if isinstance(lau, LaurentR):
            d = {m: c for m, c in lau.terms.items() if not c.is_zero()}
        else:
            d = {m: c for m, c in lau.items() if not c.is_zero()}
        if d:
            self.terms[key] = d

    # ---- constructors ---------------------------------------------------
    @staticmethod
    def zero(ctx):
        return Op2D(ctx)

    @staticmethod
    def identity(ctx):
        return Op2D(ctx, {(0, 0): {0: Coef.const(ctx, 1)}})

    @staticmethod
    def dr(ctx, order=1):
        return Op2D(ctx, {(order, 0): {0: Coef.const(ctx, 1)}})

    @staticmethod
    def dphi(ctx, order=1):
        return Op2D(ctx, {(0, order): {0: Coef.const(ctx, 1)}})

    @staticmethod
    def mult(ctx, lau: LaurentR):
        return Op2D(ctx, {(0, 0): lau})

    @staticmethod
    def term(ctx, i, j, m, c: Coef):
        return Op2D(ctx, {(i, j): {m: c}})

    # ---- structure --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def order(self):
        return max((i + j for i, j in self.terms), default=-1)

    def coefficient(self, i, j) -> LaurentR:
        return LaurentR(self.ctx, self.terms.get((i, j), {}))

    def __add__(self, other):
        out = {k: dict(v) for k, v in self.terms.items()}
        for key, lau in other.terms.items():
            dst = out.setdefault(key, {})
            for m, c in lau.items():
                v = dst.get(m)
                s = c if v is None else v + c
                if s.is_zero():
                    dst.pop(m, None)
                else:
                    dst[m] = s
            if not dst:
                out.pop(key)
        o = Op2D(self.ctx)
        o.terms = out
        return o

    def __sub__(self, other):
        return self + other.scale(F(-1))

    def scale(self, k) -> "Op2D":
        k = F(k)
        if k == 0:
            return Op2D(self.ctx)
        o = Op2D(self.ctx)
        o.terms = {key: {m: c.scale(k) for m, c in lau.items()}
                   for key, lau in self.terms.items()}
        return o

    # ---- composition -----------------------------------------------------
    def compose(self, other: "Op2D") -> "Op2D":
        """Normal form of self applied after other (self . other)."""
        ctx = self.ctx
        max_i1 = max((i for i, _ in self.terms), default=0)
        max_j1 = max((j for _, j in self.terms), default=0)

        # per (j2-coefficient) cache of phi-derivatives up to max_j1
        buckets = {}

        for (i2, j2), lau2 in other.terms.items():
            # dphi^l applied to each coefficient of lau2 (Laurent untouched by dphi)
            dcache = {}
            for m2, c2 in lau2.items():
                row = [c2]
                for _ in range(max_j1):
                    row.append(row[-1].dphi())
                dcache[m2] = row
            for (i1, j1), lau1 in self.terms.items():
                for k in range(i1 + 1):
                    bik = _binom(i1, k)
                    for l in range(j1 + 1):
                        scal_jl = bik * _binom(j1, l)
                        key = (i1 - k + i2, j1 - l + j2)
                        for m2, row in dcache.items():
                            ff = _falling(m2, k)
                            if ff == 0:
                                continue
                            c2d = row[l]
                            if c2d.is_zero():
                                continue
                            sc = scal_jl * ff
                            for m1, c1 in lau1.items():
                                buckets.setdefault((key, m1 + m2 - k), []).append(
                                    (c1, c2d, sc))
        out = Op2D(ctx)
        terms = {}
        for (key, m), items in buckets.items():
            acc = None
            for c1, c2d, sc in items:
                prod = (c1 * c2d).scale(sc)
                acc = prod if acc is None else acc + prod
            if acc is not None and not acc.is_zero():
                terms.setdefault(key, {})[m] = acc
        out.terms = terms
        return out

    def commutator(self, other: "Op2D") -> "Op2D":
        return self.compose(other) - other.compose(self)

    def anticommutator(self, other: "Op2D") -> "Op2D":
        return self.compose(other) + other.compose(self)

    def __eq__(self, other):
        return (self - other).is_zero()

    # ---- diagnostics -------------------------------------------------------
    def eval_on(self, fn, r0: float, phi0: float) -> float:
        """Apply to a smooth test function and evaluate at (r0, phi0) in floats.

        `fn(i, j, r0, phi0)` must return the (d_r^i d_phi^j) derivative value.
        """
        x0, s0 = -math.cos(2 * phi0), math.sin(2 * phi0)
        total = 0.0
        for (i, j), lau in self.terms.items():
            coeff = sum(float(c.eval(x0, s0)) * r0 ** m for m, c in lau.items())
            total += coeff * fn(i, j, r0, phi0)
        return total

    def dump(self) -> str:
        """Plain-text normal form, one term per line:
        `r^k * (even | odd s) * dr^i dphi^j`."""
        lines = []
        for (i, j) in sorted(self.terms, key=lambda t: (t[0] + t[1], t)):
            for m in sorted(self.terms[(i, j)]):
                c = self.terms[(i, j)][m]
                lines.append(f"r^{m} * {c!r} * dr^{i} dphi^{j}")
        return "\n".join(lines)


def op_compose(a: Op2D, b: Op2D) -> Op2D:
    return a.compose(b)


def op_commutator(a: Op2D, b: Op2D) -> Op2D:
    return a.commutator(b)


def op_equal(a: Op2D, b: Op2D) -> bool:
    return a == b


def powers_test_fn(p: int, q: int):
    """Smooth test function r^p cos(2 q phi) with closed-form derivatives."""
    def fn(i, j, r0, phi0):
        rad = _falling(p, i) * r0 ** (p - i)
        ang = (2 * q) ** j * math.cos(2 * q * phi0 + j * math.pi / 2)
        return rad * ang
    return fn
