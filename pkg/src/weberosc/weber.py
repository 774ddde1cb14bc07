"""Closed-form solution of x'' + A x' - (a t^2 + b t + c) x = 0.

For a > 0 the fundamental pair is built from a Hermite function of real
order and a Kummer function, both evaluated at arguments linear in t and
damped by a shared Gaussian-exponential envelope.  The q = 0 case
(a = b = 0) degenerates to a constant-coefficient oscillator and is
handled as an exact separate branch, not as a limit.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
import math

from . import specfun
from .errors import ConfigError, DegenerateBasisError, OverflowRangeError

BRANCH_HERMITE_KUMMER = "hermite_kummer"
BRANCH_CONSTANT_Q = "constant_q"

# |A^2 + 4c| below this is treated as critical damping in the q = 0 branch
_CRITICAL_TIE = 1e-12

_W_FLOOR = 1e-300


@dataclass(frozen=True)
class PhysicalConfig:
    """Physical inputs of the rotating-arm oscillator (SI units)."""

    m: float = 1.0          # bead mass [kg]
    k1: float = 10.0        # vertical spring stiffness [N/m]
    k2: float = 10.0        # radial spring stiffness [N/m]
    omega0: float = 3.0     # initial angular speed [rad/s]
    q: float = 0.1          # angular-speed decay rate [1/s]
    A: float = 0.0          # specific viscous damping [1/s]
    mu: float = 0.0         # dry-friction forcing acceleration [m/s^2]
    L: float = 1.0          # half rod length [m]
    H: float = 3.0          # shaft height [m]
    g: float = 9.81         # gravity [m/s^2]
    x0: float = 0.0         # initial radial position [m]
    v0: float = 1.0         # initial radial velocity [m/s]
    z0: float = 0.0         # initial vertical position [m]
    zdot0: float = 0.0      # initial vertical velocity [m/s]
    t_end: float = 10.0     # horizon when 1/q does not apply [s]

    def validate(self):
        if self.m <= 0:
            raise ConfigError("m must be > 0")
        if self.k1 <= 0:
            raise ConfigError("k1 must be > 0")
        if self.k2 < 0:
            raise ConfigError("k2 must be >= 0")
        if self.omega0 <= 0:
            raise ConfigError("omega0 must be > 0")
        if self.A < 0:
            raise ConfigError("A must be >= 0")
        if self.L <= 0:
            raise ConfigError("L must be > 0")
        if self.t_end <= 0:
            raise ConfigError("t_end must be > 0")
        return self

    def with_overrides(self, **kwargs):
        return replace(self, **kwargs).validate()


@dataclass(frozen=True)
class WeberCoefficients:
    """Coefficients of x'' + A x' - (a t^2 + b t + c) x = 0."""

    a: float
    b: float
    c: float
    A: float
    beta: float | None  # (b^2 - a(A^2 + 4c)) / (8 a^{3/2}); None when a = 0


def map_params_exact(omega0, q, k2, m):
    """(a, b, c) as exact rationals: a = w0^2 q^2, b = -2 q w0^2,
    c = w0^2 - k2/m.

    Accepts anything ``Fraction`` does (ints, Fractions, decimal
    strings such as "1/10" or "0.1").  ``map_params`` is this map on the
    binary values of its float inputs, rounded once per coefficient.
    """
    w2 = Fraction(omega0) ** 2
    q = Fraction(q)
    return (w2 * q * q, -2 * q * w2, w2 - Fraction(k2) / Fraction(m))


def map_params(config: PhysicalConfig) -> WeberCoefficients:
    """Derive the quadratic-stiffness coefficients from physical inputs.

    Each coefficient is computed exactly in rational arithmetic over the
    binary values of the inputs and rounded once, rather than
    accumulating one rounding per multiply.
    """
    config.validate()
    ae, be, ce = map_params_exact(config.omega0, config.q, config.k2,
                                  config.m)
    a, b, c = float(ae), float(be), float(ce)
    if a > 0.0:
        beta = (b * b - a * (config.A * config.A + 4.0 * c)) / (8.0 * a ** 1.5)
    else:
        beta = None
    return WeberCoefficients(a=a, b=b, c=c, A=config.A, beta=beta)


def evaluate_basis(coeffs: WeberCoefficients, t: float):
    """Fundamental pair (x1, x2) and derivatives at time t (a > 0 branch).

    x1 = E(t) H_{beta-1/2}(u(t)),  x2 = E(t) 1F1(1/4 - beta/2; 1/2; u(t)^2)
    with envelope E = exp(-(a t^2 + t (b + sqrt(a) A)) / (2 sqrt(a))) and
    u = (b + 2 a t) / (2 a^{3/4}).  Derivatives by exact chain rule.
    """
    a, b, A, beta = coeffs.a, coeffs.b, coeffs.A, coeffs.beta
    if not a > 0.0:
        raise ConfigError("evaluate_basis requires a > 0 (got a = %g)" % a)
    sqa = math.sqrt(a)
    a34 = a ** 0.75
    nu = beta - 0.5
    ka = 0.25 - 0.5 * beta

    try:
        ex = -(a * t * t + t * (b + sqa * A)) / (2.0 * sqa)
        env = math.exp(ex)
        denv = env * (-(2.0 * a * t + b + sqa * A) / (2.0 * sqa))
        u = (b + 2.0 * a * t) / (2.0 * a34)
        du = a ** 0.25
        w = u * u
        dw = (b + 2.0 * a * t) / sqa

        h = specfun.hermite_h(nu, u)
        dh = specfun.hermite_h_dz(nu, u)
        f = specfun.kummer_1f1(ka, 0.5, w)
        df = specfun.kummer_1f1_dz(ka, 0.5, w)

        x1 = env * h
        x1dot = denv * h + env * dh * du
        x2 = env * f
        x2dot = denv * f + env * df * dw
    except OverflowError as exc:
        raise OverflowRangeError("basis evaluation overflowed at t = %g" % t,
                                 t=t) from exc
    if not all(map(math.isfinite, (x1, x2, x1dot, x2dot))):
        raise OverflowRangeError("basis evaluation overflowed at t = %g" % t,
                                 t=t)
    return x1, x2, x1dot, x2dot


def wronskian(coeffs: WeberCoefficients, t: float) -> float:
    """W(t) = x1 x2' - x2 x1'; by Abel's identity W(t) = W(0) e^{-A t}."""
    x1, x2, x1dot, x2dot = evaluate_basis(coeffs, t)
    return x1 * x2dot - x2 * x1dot


@dataclass(frozen=True)
class ClosedFormSolution:
    """General solution C1 x1 + C2 x2 fitted to initial conditions."""

    coeffs: WeberCoefficients
    C1: float
    C2: float
    branch: str


def solve_ivp(coeffs: WeberCoefficients, x0: float, v0: float) -> ClosedFormSolution:
    """Fit the two free constants to (x(0), x'(0)) = (x0, v0)."""
    if coeffs.a > 0.0:
        x1, x2, x1dot, x2dot = evaluate_basis(coeffs, 0.0)
        w0 = x1 * x2dot - x2 * x1dot
        if abs(w0) < _W_FLOOR:
            raise DegenerateBasisError("Wronskian at t=0 is numerically zero")
        c1 = (x0 * x2dot - v0 * x2) / w0
        c2 = (v0 * x1 - x0 * x1dot) / w0
        return ClosedFormSolution(coeffs, c1, c2, BRANCH_HERMITE_KUMMER)
    if coeffs.a != 0.0 or coeffs.b != 0.0:
        raise ConfigError("constant branch requires a = b = 0")
    # x'' + A x' - c x = 0: discriminant of r^2 + A r - c
    A, c = coeffs.A, coeffs.c
    disc = A * A + 4.0 * c
    if disc > _CRITICAL_TIE:
        rt = math.sqrt(disc)
        r1 = 0.5 * (-A + rt)
        r2 = 0.5 * (-A - rt)
        c1 = (v0 - r2 * x0) / (r1 - r2)
        c2 = x0 - c1
    elif disc < -_CRITICAL_TIE:
        lam = -0.5 * A
        om = 0.5 * math.sqrt(-disc)
        c1 = x0
        c2 = (v0 - lam * x0) / om
    else:
        c1 = x0
        c2 = v0 + 0.5 * A * x0
    return ClosedFormSolution(coeffs, c1, c2, BRANCH_CONSTANT_Q)


def eval_solution(sol: ClosedFormSolution, t: float):
    """Evaluate (x, x') of the fitted solution at time t."""
    if sol.branch == BRANCH_HERMITE_KUMMER:
        x1, x2, x1dot, x2dot = evaluate_basis(sol.coeffs, t)
        return (sol.C1 * x1 + sol.C2 * x2,
                sol.C1 * x1dot + sol.C2 * x2dot)
    A, c = sol.coeffs.A, sol.coeffs.c
    disc = A * A + 4.0 * c
    c1, c2 = sol.C1, sol.C2
    if disc > _CRITICAL_TIE:
        rt = math.sqrt(disc)
        r1 = 0.5 * (-A + rt)
        r2 = 0.5 * (-A - rt)
        e1 = math.exp(r1 * t)
        e2 = math.exp(r2 * t)
        return c1 * e1 + c2 * e2, c1 * r1 * e1 + c2 * r2 * e2
    if disc < -_CRITICAL_TIE:
        lam = -0.5 * A
        om = 0.5 * math.sqrt(-disc)
        e = math.exp(lam * t)
        cs = math.cos(om * t)
        sn = math.sin(om * t)
        x = e * (c1 * cs + c2 * sn)
        xdot = e * (lam * (c1 * cs + c2 * sn) + om * (-c1 * sn + c2 * cs))
        return x, xdot
    lam = -0.5 * A
    e = math.exp(lam * t)
    x = e * (c1 + c2 * t)
    xdot = e * (lam * (c1 + c2 * t) + c2)
    return x, xdot
