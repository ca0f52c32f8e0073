"""The deformed radial oscillator: Hamiltonian, integrals of motion,
polynomial families, wavefunctions and exact eigen-identities.

Conventions (see README): x = -cos(2 phi), s = sin(2 phi). The oscillator
coupling is nu = omega/2, i.e. the potential's radial part is nu^2 r^2 and the
ground-state Gaussian is exp(-nu r^2 / 2); this is the unique normalization
under which the energy law E = omega (2 + 2m + 2n + alpha + beta) holds
exactly. The angular potential is V(x) = 2 T'(phi) with

    T = (alpha^2-1/4)/2 tan(phi) - (beta^2-1/4)/2 cot(phi) + 2 sin(2phi)/(b+cos(2phi)).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction

from .exact import F, Poly, RatFn, TrigRat
from .ring import Coef, RingCtx
from .operators import LaurentR, Op2D
from .waves import QuasiPoly, WaveSum, op_apply, NonClosureError


class ParameterError(ValueError):
    """Invalid model parameters."""


class ConstructionError(RuntimeError):
    """The fourth-order integral could not be assembled exactly."""


@dataclass(frozen=True)
class SystemParams:
    """Model parameters (alpha, beta, omega) with derived pole b."""

    alpha: Fraction
    beta: Fraction
    omega: Fraction

    def __init__(self, alpha, beta, omega):
        object.__setattr__(self, "alpha", F(alpha))
        object.__setattr__(self, "beta", F(beta))
        object.__setattr__(self, "omega", F(omega))
        if self.alpha <= F(-1, 2) or self.beta <= F(-1, 2):
            raise ParameterError("alpha and beta must both exceed -1/2")
        if self.alpha == self.beta:
            raise ParameterError("alpha == beta leaves the pole b undefined")
        if abs(self.b) <= 1:
            raise ParameterError(f"|b| = {abs(self.b)} <= 1 puts the pole on the wedge")
        if self.omega <= 0:
            raise ParameterError("omega must be positive")

    @property
    def b(self) -> Fraction:
        return (self.alpha + self.beta) / (self.beta - self.alpha)

    @property
    def nu(self) -> Fraction:
        """Oscillator coupling: potential nu^2 r^2, Gaussian exp(-nu r^2/2)."""
        return self.omega / 2

    @property
    def ctx(self) -> RingCtx:
        return RingCtx(self.b)


# ---------------------------------------------------------------------------
# angular building blocks
# ---------------------------------------------------------------------------

def trig_T(p: SystemParams) -> TrigRat:
    """The angular potential's half-antiderivative T (odd element)."""
    a2 = p.alpha * p.alpha - F(1, 4)
    b2 = p.beta * p.beta - F(1, 4)
    one_m = Poly((F(1), F(-1)))
    one_p = Poly((F(1), F(1)))
    bmx = Poly((p.b, F(-1)))
    odd = (RatFn(Poly.const(a2 / 2), one_m) - RatFn(Poly.const(b2 / 2), one_p)
           + RatFn(Poly.const(2), bmx))
    return TrigRat(odd=odd)


def ring_T(p: SystemParams) -> Coef:
    return Coef.from_trigrat(p.ctx, trig_T(p))


def angular_potential(p: SystemParams) -> Coef:
    """V(x) = 2 T'(phi) = 2(a^2-1/4)/(1-x) + 2(b^2-1/4)/(1+x) + 8(1-bx)/(b-x)^2."""
    return ring_T(p).dphi().scale(2)


def _x(ctx) -> Coef:
    return Coef.xpoly(ctx, [F(0), F(1)])


def _s(ctx) -> Coef:
    return Coef.xpoly(ctx, [F(1)], odd=True)


# ---------------------------------------------------------------------------
# H and the second-order integral
# ---------------------------------------------------------------------------

def hamiltonian(p: SystemParams) -> Op2D:
    """H = -d_rr - r^-1 d_r - r^-2 d_phiphi + nu^2 r^2 + V(x)/r^2."""
    ctx = p.ctx
    one = Coef.const(ctx, 1)
    H = Op2D(ctx)
    H = H + Op2D.term(ctx, 2, 0, 0, one.scale(-1))
    H = H + Op2D.term(ctx, 1, 0, -1, one.scale(-1))
    H = H + Op2D.term(ctx, 0, 2, -2, one.scale(-1))
    H = H + Op2D.term(ctx, 0, 0, 2, one.scale(p.nu ** 2))
    H = H + Op2D.term(ctx, 0, 0, -2, angular_potential(p))
    return H


def angular_integral(p: SystemParams) -> Op2D:
    """L1 = -d_phiphi + V(x); commutes with H by separability."""
    ctx = p.ctx
    L1 = Op2D(ctx)
    L1 = L1 + Op2D.term(ctx, 0, 2, 0, Coef.const(ctx, -1))
    L1 = L1 + Op2D.term(ctx, 0, 0, 0, angular_potential(p))
    return L1


# ---------------------------------------------------------------------------
# the fourth-order integral
# ---------------------------------------------------------------------------

def c12_value(p: SystemParams) -> Fraction:
    a, b = p.alpha, p.beta
    return 8 * (a * a - a * b + b * b) + 18


def g_functions(p: SystemParams, c11=F(0), c12=None):
    """The polar-collected coefficient functions (G1, G2, G3) as LaurentR."""
    ctx = p.ctx
    c11 = F(c11)
    c12 = c12_value(p) if c12 is None else F(c12)
    T = ring_T(p)
    T1 = T.dphi()
    x = _x(ctx)
    s = _s(ctx)
    G1_c = (x * T1).scale(-2) + (s * T).scale(-2) + x.scale(c12 / 4) + s.scale(c11 / 4)
    G1 = LaurentR.mono(ctx, 0, G1_c)
    G2_c = ((s * T1).scale(12) + (x * T).scale(-8)
            + s.scale(-c12) + x.scale(c11)).scale(F(-1, 2))
    G2 = LaurentR.mono(ctx, -1, G2_c)
    G3_c0 = ((x * T1).scale(-16) + (s * T).scale(-8)
             + x.scale(c12) + s.scale(c11)).scale(F(-1, 4))
    G3 = (LaurentR.mono(ctx, -2, G3_c0)
          + LaurentR.mono(ctx, 2, x.scale(-(p.nu ** 2))))
    return G1, G2, G3


def determining_residuals(p: SystemParams, G1, G2, G3):
    """The four first-order determining equations; each residual must vanish.

    eq1: d_r G1 = 0
    eq2: r^2 d_r G2 + d_phi G1 + 2 x T'' = 0
    eq3: r^3 d_r G3 + r d_phi G2 + 2 G1 + 6 s T'' - 4 x T' + 2 x nu^2 r^4 = 0
    eq4: r^2 d_phi G3 + r G2 - 4 x T'' - 4 s T' + 2 s nu^2 r^4 = 0
    """
    ctx = p.ctx
    T1 = ring_T(p).dphi()
    T2 = T1.dphi()
    x, s = _x(ctx), _s(ctx)
    nu2 = p.nu ** 2
    r1 = G1.dr()
    r2 = G2.dr().scale_shift(2) + G1.dphi() + LaurentR.mono(ctx, 0, (x * T2).scale(2))
    r3 = (G3.dr().scale_shift(3) + G2.dphi().scale_shift(1) + G1.scale(2)
          + LaurentR.mono(ctx, 0, (s * T2).scale(6) + (x * T1).scale(-4))
          + LaurentR.mono(ctx, 4, x.scale(2 * nu2)))
    r4 = (G3.dphi().scale_shift(2) + G2.scale_shift(1)
          + LaurentR.mono(ctx, 0, (x * T2).scale(-4) + (s * T1).scale(-4))
          + LaurentR.mono(ctx, 4, s.scale(2 * nu2)))
    return [r1, r2, r3, r4]


def g0_equation_rhs(p: SystemParams, c11=F(0), c12=None):
    """Closed forms of the G0 determining equations.

    Returns (R_rad, R_ang) with r^3 dG0/dr = R_rad and r^2 dG0/dphi = R_ang.
    """
    ctx = p.ctx
    c11 = F(c11)
    c12 = c12_value(p) if c12 is None else F(c12)
    T0 = ring_T(p)
    T1 = T0.dphi()
    T2 = T1.dphi()
    T3 = T2.dphi()
    T4 = T3.dphi()
    x, s = _x(ctx), _s(ctx)
    nu2 = p.nu ** 2
    rad0 = ((s * T4) + (x * T3).scale(-8) + (s * T2).scale(-20)
            + (x * T1).scale(16) + (s * T1 * T2).scale(-12)
            + (x * T1 * T1).scale(16) + (x * T0 * T2).scale(8)
            + (s * T0 * T1).scale(16)
            + ((s * T2) + (x * T1).scale(-2)).scale(c12)
            + ((x * T2).scale(-1) + (s * T1).scale(-2)).scale(c11))
    rad4 = (x.scale(8 + c12) + s.scale(c11)
            + (x * T1).scale(-8) + (s * T0).scale(-8)).scale(nu2)
    ang0 = ((s * T3).scale(-2) + (x * T2).scale(12) + (s * T1).scale(16)
            + (x * T1 * T2).scale(16) + (s * T1 * T1).scale(24)
            + (s * T0 * T2).scale(8) + (x * T0 * T1).scale(-16)
            + ((x * T2).scale(-1) + (s * T1).scale(-2)).scale(c12)
            + ((s * T2).scale(-1) + (x * T1).scale(2)).scale(c11))
    ang4 = (s.scale(8 + c12) + x.scale(-c11)
            + (x * T2).scale(-4) + (s * T1).scale(-12) + (x * T0).scale(8)).scale(nu2)
    R_rad = LaurentR.mono(ctx, 0, rad0) + LaurentR.mono(ctx, 4, rad4)
    R_ang = LaurentR.mono(ctx, 0, ang0) + LaurentR.mono(ctx, 4, ang4)
    return R_rad, R_ang


def t_equation_residual(p: SystemParams, c11=F(0), c12=None) -> LaurentR:
    """Integrability residual of the G0 equations: the nonlinear equation for T.

    d_phi(R_rad / r^3) - d_r(R_ang / r^2) as a Laurent element; identically
    zero exactly when (c11, c12) take the model's values.
    """
    R_rad, R_ang = g0_equation_rhs(p, c11, c12)
    return R_rad.scale_shift(-3).dphi() - R_ang.scale_shift(-2).dr()


def _cartesian_second_order_ops(ctx):
    """Polar normal forms of d_xx, d_xy, d_yy."""
    one = Coef.const(ctx, 1)
    x, s = _x(ctx), _s(ctx)
    half = F(1, 2)
    one_m = Coef.xpoly(ctx, [half, -half])   # (1-x)/2
    one_p = Coef.xpoly(ctx, [half, half])    # (1+x)/2
    dxx = (Op2D.term(ctx, 2, 0, 0, one_m)
           + Op2D.term(ctx, 1, 1, -1, s.scale(-1))
           + Op2D.term(ctx, 1, 0, -1, one_p)
           + Op2D.term(ctx, 0, 2, -2, one_p)
           + Op2D.term(ctx, 0, 1, -2, s))
    dyy = (Op2D.term(ctx, 2, 0, 0, one_p)
           + Op2D.term(ctx, 1, 1, -1, s)
           + Op2D.term(ctx, 1, 0, -1, one_m)
           + Op2D.term(ctx, 0, 2, -2, one_m)
           + Op2D.term(ctx, 0, 1, -2, s.scale(-1)))
    dxy = (Op2D.term(ctx, 2, 0, 0, s.scale(half))
           + Op2D.term(ctx, 1, 1, -1, x.scale(-1))
           + Op2D.term(ctx, 1, 0, -1, s.scale(-half))
           + Op2D.term(ctx, 0, 2, -2, s.scale(-half))
           + Op2D.term(ctx, 0, 1, -2, x))
    return dxx, dxy, dyy


@dataclass
class IntegralBundle:
    """H, the second- and fourth-order integrals, and bookkeeping."""

    params: SystemParams
    H: Op2D
    L1: Op2D
    L2: Op2D
    c_constants: dict
    G0: LaurentR
    G_functions: tuple


def quartic_integral(p: SystemParams, c11=F(0), c12_offset=F(0),
                     g0_shift=F(0)) -> IntegralBundle:
    """Assemble the fourth-order integral L2 and integrate G0 exactly.

    Raises ConstructionError when the commutator residual is not integrable
    (e.g. under a deliberately perturbed c12).
    """
    ctx = p.ctx
    c12 = c12_value(p) + F(c12_offset)
    G1, G2, G3 = g_functions(p, c11=c11, c12=c12)

    # Cartesian quadratic-form coefficients from the polar-collected ones
    x, s = _x(ctx), _s(ctx)
    r2G3 = G3.scale_shift(2)
    Sig = G1 + r2G3
    Dif = G1 - r2G3
    rG2 = G2.scale_shift(1)
    Delta = Dif.mul_coef(x).scale(-1) - rG2.mul_coef(s)
    g2c = Dif.mul_coef(s) - rG2.mul_coef(x)
    g1c = (Sig + Delta).scale(F(1, 2))
    g3c = (Sig - Delta).scale(F(1, 2))

    dxx, dxy, dyy = _cartesian_second_order_ops(ctx)
    dpp = Op2D.dphi(ctx, 2)
    D = dxx - dyy
    lead = D.compose(dpp) + dpp.compose(D)

    def anti(glau, dop):
        gop = Op2D.mult(ctx, glau)
        return gop.compose(dop) + dop.compose(gop)

    L20 = lead - anti(g1c, dxx) - anti(g2c, dxy) - anti(g3c, dyy)

    H = hamiltonian(p)
    R = H.commutator(L20)
    for (i, j) in R.terms:
        if i + j >= 2:
            raise ConstructionError(
                f"[H, L2] residual has order-({i},{j}) term: "
                f"{R.coefficient(i, j)!r}")

    # [H, G0] must equal -R:  R = (Lap G0) + 2 G0_r d_r + (2/r^2) G0_phi d_phi
    dG0_dr = R.coefficient(1, 0).scale(F(1, 2))
    dG0_dphi = R.coefficient(0, 1).scale(F(1, 2)).scale_shift(2)

    # Laurent antiderivative in r
    g0_terms = {}
    for m, c in dG0_dr.terms.items():
        if m == -1:
            raise ConstructionError("G0 integration hit an r^-1 term "
                                    "(signals wrong c-constants)")
        g0_terms[m + 1] = c.scale(F(1, m + 1))
    G0 = LaurentR(ctx, g0_terms)

    # consistency: d_phi of the integral must reproduce the required gradient
    mismatch = G0.dphi() - dG0_dphi
    if not mismatch.is_zero():
        bad = {m for m in mismatch.terms}
        if bad == {0}:
            raise ConstructionError("G0 needs a non-constant phi-dependent "
                                    "integration term (inconsistent constants)")
        raise ConstructionError(f"G0 cross-derivative mismatch at r-powers {bad}")

    if g0_shift:
        G0 = G0 + LaurentR.mono(ctx, 0, Coef.const(ctx, F(g0_shift)))

    L2 = L20 + Op2D.mult(ctx, G0)

    # zeroth-order closure check (guaranteed by formal symmetry, verified anyway)
    final = R + H.commutator(Op2D.mult(ctx, G0))
    if not final.is_zero():
        raise ConstructionError("[H, L2] != 0 after G0 integration")

    consts = {"c10": F(0), "c11": F(c11), "c12": c12, "c21": F(0),
              "c22": F(0), "c30": F(0)}
    return IntegralBundle(p, H, angular_integral(p), L2, consts, G0,
                          (G1, G2, G3))


# ---------------------------------------------------------------------------
# classical polynomial families
# ---------------------------------------------------------------------------

def laguerre(m: int, C) -> Poly:
    """Generalized Laguerre L_m^C: y F'' + (C+1-y) F' + m F = 0,
    normalized by the three-term recurrence with L_0 = 1, L_1 = 1 + C - y."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    C = F(C)
    p0 = Poly.const(1)
    if m == 0:
        return p0
    p1 = Poly((1 + C, F(-1)))
    for k in range(2, m + 1):
        # k L_k = (2k - 1 + C - y) L_{k-1} - (k - 1 + C) L_{k-2}
        p0, p1 = p1, (Poly((2 * k - 1 + C, F(-1))) * p1
                      - p0 * (k - 1 + C)) * F(1, k)
    return p1


def laguerre_ode_residual(P: Poly, m: int, C) -> Poly:
    C = F(C)
    y = Poly.x()
    return y * P.deriv().deriv() + Poly((C + 1, F(-1))) * P.deriv() + P * m


def jacobi(n: int, a, b) -> Poly:
    """Classical Jacobi P_n^(a,b), standard normalization P_n(1) = binom(n+a, n)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a, b = F(a), F(b)
    p0 = Poly.const(1)
    if n == 0:
        return p0
    p1 = Poly(((a - b) / 2, (a + b + 2) / 2))
    for k in range(2, n + 1):
        c1 = F(2) * k * (k + a + b) * (2 * k + a + b - 2)
        c2 = (2 * k + a + b - 1)
        c2poly = Poly((a * a - b * b, (2 * k + a + b) * (2 * k + a + b - 2))) * c2
        c3 = F(2) * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        p0, p1 = p1, (c2poly * p1 - p0 * c3) * (1 / c1)
    return p1


def jacobi_ode_residual(P: Poly, n: int, a, b) -> Poly:
    a, b = F(a), F(b)
    one_m_x2 = Poly((F(1), F(0), F(-1)))
    lin = Poly((b - a, -(a + b + 2)))
    lam = n * (n + a + b + 1)
    return one_m_x2 * P.deriv().deriv() + lin * P.deriv() + P * lam


# ---------------------------------------------------------------------------
# wavefunctions
# ---------------------------------------------------------------------------

def angular_gauge_exponents(p: SystemParams):
    """(p, q, k) of the gauge (1-x)^(a/2+1/4) (1+x)^(b/2+1/4) / (x-b)."""
    return (p.alpha / 2 + F(1, 4), p.beta / 2 + F(1, 4), -1)


def partner_eigenfunction(p: SystemParams, n: int) -> QuasiPoly:
    """Angular eigenfunction of the partner (factorized) operator."""
    return QuasiPoly(p.nu, F(0), False, Poly.const(1), p.b,
                     p.alpha / 2 + F(3, 4), p.beta / 2 - F(1, 4), 0,
                     jacobi(n, p.alpha + 1, p.beta - 1))


def lowering_log_derivative(p: SystemParams) -> Coef:
    """xi'/xi for the seed xi = cos^(-a-1/2) sin^(b-1/2) (b + cos 2 phi)."""
    one_m = Poly((F(1), F(-1)))
    one_p = Poly((F(1), F(1)))
    bmx = Poly((p.b, F(-1)))
    odd = (RatFn(Poly.const(p.alpha + F(1, 2)), one_m)
           + RatFn(Poly.const(p.beta - F(1, 2)), one_p)
           - RatFn(Poly.const(2), bmx))
    return Coef.from_trigrat(p.ctx, TrigRat(odd=odd))


def _wavesum_to_single(ws: WaveSum, p: SystemParams) -> QuasiPoly:
    C0, p0, q0, k0, table = ws.canonical()
    if not table:
        return QuasiPoly(p.nu, F(0), False, Poly(), p.b, F(0), F(0), 0, Poly())
    if any(i for i, _ in table):
        raise NonClosureError("sum is not purely angular")
    xpoly = Poly([table.get((0, j), F(0))
                  for j in range(max(j for _, j in table) + 1)])
    return QuasiPoly(p.nu, C0, False, Poly.const(1), p.b, p0, q0, k0, xpoly)


def angular_eigenfunction(p: SystemParams, n: int) -> QuasiPoly:
    """Eigenfunction of the deformed angular operator: A applied to the
    partner eigenfunction (one odd trig factor appears)."""
    psi = partner_eigenfunction(p, n)
    lowered = WaveSum.of(psi.dphi()) + psi.mul_coef(lowering_log_derivative(p)).scale(-1)
    return _wavesum_to_single(lowered, p)


def exceptional_jacobi(n: int, p: SystemParams) -> Poly:
    """Deformed (exceptional) Jacobi polynomial of co-degree 1.

    Index n >= 0 labels the partner state; the returned polynomial has degree
    n + 1 (there is no constant member: degree 0 is the gap).
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    phi_n = angular_eigenfunction(p, n)
    gp, gq, gk = angular_gauge_exponents(p)
    dp, dq, dk = phi_n.p - gp, phi_n.q - gq, phi_n.k - gk
    if dp.denominator != 1 or dq.denominator != 1 or dp < 0 or dq < 0 or dk < 0:
        raise NonClosureError("gauge exponent bookkeeping failed "
                              f"({phi_n.p},{phi_n.q},{phi_n.k})")
    out = (phi_n.xpoly * Poly((F(1), F(-1))) ** int(dp)
           * Poly((F(1), F(1))) ** int(dq) * Poly((-p.b, F(1))) ** int(dk))
    return out


def exceptional_operator_apply(P: Poly, p: SystemParams) -> RatFn:
    """Apply the deformed Sturm-Liouville operator in x to a polynomial."""
    a, b = p.alpha, p.beta
    bmx = Poly((p.b, F(-1)))
    x2m1 = Poly((F(-1), F(0), F(1)))
    pref = RatFn(Poly.const(4 * (b - a)) * Poly((F(1), -p.b)), bmx)
    lin = Poly((-p.b + 2 / (a - b), F(1)))
    out = (RatFn(x2m1 * P.deriv().deriv() * 4)
           + pref * RatFn(lin * P.deriv() - P)
           + RatFn(P * (a + b + 1) ** 2))
    return out


def angular_eigenvalue(p: SystemParams, n: int) -> Fraction:
    """C_n^2 = (2n + alpha + beta + 1)^2."""
    return (2 * n + p.alpha + p.beta + 1) ** 2


def energy(m: int, n: int, p: SystemParams) -> Fraction:
    """E = omega (2 + 2m + 2n + alpha + beta)."""
    if m < 0 or n < 0:
        raise ValueError("quantum numbers must be nonnegative")
    return p.omega * (2 + 2 * m + 2 * n + p.alpha + p.beta)


def radial_factor(p: SystemParams, m: int, n: int) -> tuple:
    """(C, Laguerre poly) of the radial part for quantum numbers (m, n)."""
    C = 2 * n + p.alpha + p.beta + 1
    return C, laguerre(m, C)


def eigenstate(p: SystemParams, m: int, n: int) -> QuasiPoly:
    """Full bound state R_m (x) Phi_n as a single quasi-polynomial product."""
    C, lag = radial_factor(p, m, n)
    ang = angular_eigenfunction(p, n)
    return QuasiPoly(p.nu, C, True, lag, p.b, ang.p, ang.q, ang.k, ang.xpoly)


def eigen_identity_holds(p: SystemParams, op: Op2D, state: QuasiPoly,
                         eigenvalue: Fraction) -> bool:
    """Exact check  op(state) == eigenvalue * state."""
    return op_apply(op, state).equals(WaveSum.of(state).scale(eigenvalue))


# ---------------------------------------------------------------------------
# exports and reports
# ---------------------------------------------------------------------------

def export_wavefunction_csv(p: SystemParams, m: int, n: int,
                            r_values, phi_values, path):
    """CSV sample of the (m, n) bound state: header r,phi,psi."""
    state = eigenstate(p, m, n)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["r", "phi", "psi"])
        for r0 in r_values:
            for phi0 in phi_values:
                w.writerow([f"{float(r0):.12g}", f"{float(phi0):.12g}",
                            f"{state.eval(float(r0), float(phi0)):.12g}"])


def appendix_g0_comparison(bundle: IntegralBundle, xs=None, rs=None) -> dict:
    """Compare the integrated G0 against the printed appendix expression.

    The appendix formula is reproduced literally (with its unbalanced
    parenthesis read as a (b-x)^4-type pole and the variable y = cos^2 phi =
    (1-x)/2); exact differences are reported, never reconciled.
    """
    p = bundle.params
    al, be = p.alpha, p.beta
    xs = xs or [F(-1, 3), F(0), F(2, 5)]
    rs = rs or [F(1, 2), F(1), F(3, 2)]

    def appendix_value(xv, rv, harmonic):
        y = (1 - xv) / 2
        pole = (al - be) * y - al
        r2part = harmonic * rv ** 2 * 2 * (
            (F(1, 4) - al * al) / y + (F(1, 4) - be * be) / (y - 1)
            - 8 * al * be * (al + be) / (pole ** 2 * (al - be))
            - 4 * (al * al + 4 * al * be + be * be) / (pole * (al - be))
            - 2 * ((al - be) ** 2 + 3) * y + 2 * al * (al - be)
            - (al - 7 * be) / (al - be))
        inv2 = (
            ((1 - 4 * al ** 2) * (-8 * al ** 3 + 8 * al ** 2 * be + 12 * al
                                  - 32 * be) * y + al * (1 - 4 * al ** 2))
            / (8 * al * y ** 2)
            + ((1 - 4 * be ** 2) * (-8 * be ** 3 + 8 * al * be ** 2 + 12 * be
                                    - 32 * al) * (y - 1) + be * (1 - 4 * be ** 2))
            / (8 * be * (y - 1) ** 2)
            + (-al ** 3 * (4 * al ** 2 * be ** 2 - al ** 2 - 3 * al * be
                           + 5 * be ** 2)
               + al ** 2 * (12 * al ** 3 * be ** 2 - 12 * al ** 2 * be ** 3
                            - 3 * al ** 3 - 12 * al ** 2 * be
                            + 8 * al * be ** 2 + 23 * be ** 3) * y
               - al * (12 * al ** 4 * be ** 2 - 24 * al ** 3 * be ** 3
                       + 12 * al ** 2 * be ** 4 - 3 * al ** 4
                       - 15 * al ** 3 * be - 22 * al ** 2 * be ** 2
                       + 53 * al * be ** 3 + 3 * be ** 4) * y ** 2
               + (al - be) * (4 * al ** 4 * be ** 2 - 8 * al ** 3 * be ** 3
                              + 4 * al ** 2 * be ** 4 - al ** 4
                              - 7 * al ** 3 * be - 32 * al ** 2 * be ** 2
                              - 7 * al * be ** 3 - be ** 4) * y ** 3)
            / pole ** 4)
        return r2part + inv2 / rv ** 2

    rows = []
    for harmonic_name, harmonic in (("nu^2", p.nu ** 2), ("omega^2", p.omega ** 2)):
        diffs = []
        for xv in xs:
            for rv in rs:
                mine = sum(c.eval(xv, F(0)) * rv ** m
                           for m, c in bundle.G0.terms.items())
                diffs.append(mine - appendix_value(xv, rv, harmonic))
        constant = all(d == diffs[0] for d in diffs)
        rows.append({"harmonic": harmonic_name,
                     "constant_difference": constant,
                     "sample_diffs": [str(d) for d in diffs[:6]]})
    return {"comparisons": rows}
