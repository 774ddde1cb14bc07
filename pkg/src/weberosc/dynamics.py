"""Full 3-D bead kinematics on the rotating arm.

Vertical oscillation z(t), constraint reactions R_y and R_z, the arm
rotation theta(t) with its inverse t(theta), the polar projection
rho(theta) of the bead's trajectory, the five transient presets, and
trajectory sampling with the |x| <= L cutoff.
"""

from dataclasses import dataclass, field
import math

from . import weber
from .errors import ConfigError, DomainError
from .weber import ClosedFormSolution, PhysicalConfig

DEFAULT_DRAG_SET = (0.2, 0.5, 1.0, 2.0)  # figure-style sweep; not paper data
DEFAULT_N_SAMPLES = 1001


@dataclass(frozen=True)
class VerticalMotion:
    """z(t) = C3 sin(omega_bar t + C4) - m g / k1."""

    C3: float
    C4: float
    omega_bar: float
    offset: float  # -m g / k1

    @classmethod
    def from_config(cls, config: PhysicalConfig) -> "VerticalMotion":
        config.validate()
        om = math.sqrt(config.k1 / config.m)
        off = -config.m * config.g / config.k1
        dz = config.z0 - off  # z0 + m g / k1
        c3 = math.sqrt(dz * dz + (config.zdot0 / om) ** 2)
        # two-argument arctangent resolves the quadrant; zdot0 = 0 maps to
        # +-pi/2 with the sign of z0 + m g / k1
        c4 = math.atan2(om * (config.k1 * config.z0 + config.m * config.g),
                        config.zdot0 * config.k1)
        return cls(C3=c3, C4=c4, omega_bar=om, offset=off)


def z_motion(config: PhysicalConfig, t: float):
    """Closed-form vertical position and velocity at time t."""
    vm = VerticalMotion.from_config(config)
    ph = vm.omega_bar * t + vm.C4
    z = vm.C3 * math.sin(ph) + vm.offset
    zdot = vm.C3 * vm.omega_bar * math.cos(ph)
    return z, zdot


def reaction_z(config: PhysicalConfig, t: float) -> float:
    """Vertical constraint reaction R_z = m (g + z'')."""
    vm = VerticalMotion.from_config(config)
    ph = vm.omega_bar * t + vm.C4
    zddot = -vm.C3 * vm.omega_bar * vm.omega_bar * math.sin(ph)
    return config.m * (config.g + zddot)


def reaction_y(config: PhysicalConfig, sol: ClosedFormSolution, t: float) -> float:
    """Transverse reaction R_y = 2 m w0 (1 - q t) x' - m w0 q x."""
    x, xdot = weber.eval_solution(sol, t)
    w0 = config.omega0
    return 2.0 * config.m * w0 * (1.0 - config.q * t) * xdot \
        - config.m * w0 * config.q * x


def theta_of_t(config: PhysicalConfig, t: float) -> float:
    """Arm rotation angle theta(t) = w0 (t - q t^2 / 2), theta(0) = 0."""
    return config.omega0 * (t - 0.5 * config.q * t * t)


def t_of_theta(config: PhysicalConfig, theta: float) -> float:
    """Inverse of theta(t) on its monotone branch.

    For q > 0 the admissible range is 0 <= theta <= w0 / (2 q); for
    q = 0 the rotation is uniform.
    """
    q, w0 = config.q, config.omega0
    if q == 0.0:
        return theta / w0
    radicand = 1.0 - 2.0 * q * theta / w0
    if q > 0.0 and not 0.0 <= theta <= w0 / (2.0 * q) + 1e-12:
        raise DomainError("theta = %g outside [0, %g]" % (theta, w0 / (2.0 * q)))
    if radicand < 0.0:
        raise DomainError("negative radicand for theta = %g" % theta)
    return (1.0 - math.sqrt(radicand)) / q


def polar_curve(config: PhysicalConfig, sol: ClosedFormSolution,
                theta: float) -> float:
    """Planar polar projection rho(theta) = x(t(theta))."""
    t = t_of_theta(config, theta)
    x, _ = weber.eval_solution(sol, t)
    return x


@dataclass(frozen=True)
class TransientPreset:
    id: str
    q: float
    k2: float
    drag_set: tuple = DEFAULT_DRAG_SET


# V's k2 is chosen so its c stays negative (damped oscillations), the one
# regime the summary table ascribes to it.
PRESETS = {
    "I": TransientPreset("I", q=0.1, k2=10.0),
    "II": TransientPreset("II", q=0.1, k2=8.0),
    "III": TransientPreset("III", q=-0.1, k2=30.0),
    "IV": TransientPreset("IV", q=-0.1, k2=8.0),
    "V": TransientPreset("V", q=0.0, k2=10.0),
}


def apply_preset(config: PhysicalConfig, preset_id: str,
                 A: float | None = None) -> PhysicalConfig:
    """Return a config with the preset's q and k2 (and optionally A)."""
    try:
        p = PRESETS[preset_id]
    except KeyError:
        raise ConfigError("unknown preset %r" % preset_id) from None
    over = {"q": p.q, "k2": p.k2}
    if A is not None:
        over["A"] = A
    return config.with_overrides(**over)


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    x: float
    xdot: float
    z: float
    zdot: float
    theta: float
    rho: float  # x renamed in the polar frame; equal by construction
    Ry: float
    Rz: float


@dataclass(frozen=True)
class TransientResult:
    config: PhysicalConfig
    samples: list = field(default_factory=list)
    truncated: bool = False
    t_trunc: float | None = None


def horizon(config: PhysicalConfig) -> float:
    """Physical time span: 1/q when the arm spins down, t_end otherwise."""
    if config.q > 0.0:
        return 1.0 / config.q
    return config.t_end


def run_transient(config: PhysicalConfig,
                  n_samples: int = DEFAULT_N_SAMPLES) -> TransientResult:
    """Sample the full state on a uniform grid, cut at the first |x| > L."""
    if n_samples < 2:
        raise ConfigError("n_samples must be >= 2")
    config.validate()
    coeffs = weber.map_params(config)
    sol = weber.solve_ivp(coeffs, config.x0, config.v0)
    vm = VerticalMotion.from_config(config)
    t_end = horizon(config)
    dt = t_end / (n_samples - 1)
    samples = []
    truncated = False
    t_trunc = None
    for i in range(n_samples):
        t = i * dt
        x, xdot = weber.eval_solution(sol, t)
        if abs(x) > config.L:
            truncated = True
            t_trunc = t
            break
        ph = vm.omega_bar * t + vm.C4
        z = vm.C3 * math.sin(ph) + vm.offset
        zdot = vm.C3 * vm.omega_bar * math.cos(ph)
        rz = config.m * (config.g - vm.C3 * vm.omega_bar ** 2 * math.sin(ph))
        ry = 2.0 * config.m * config.omega0 * (1.0 - config.q * t) * xdot \
            - config.m * config.omega0 * config.q * x
        samples.append(TrajectorySample(t=t, x=x, xdot=xdot, z=z, zdot=zdot,
                                        theta=theta_of_t(config, t), rho=x,
                                        Ry=ry, Rz=rz))
    return TransientResult(config=config, samples=samples,
                           truncated=truncated, t_trunc=t_trunc)
