"""Model Hamiltonians and classical potentials, with named parameter presets.

Every builder returns a dense Hermitian matrix assembled from the discrete
bases in :mod:`qcosmo.bases`. Potentials of a position operator are applied
by spectral calculus, so exponential terms are exact matrix functions of the
truncated operator.

Default parameters are chosen so that the well-known desk-scale benchmarks
come out of the box: the inflaton well has unit curvature at its bottom, and
the single-radius dark-energy landscape is tuned to leave a residual vacuum
energy of about 1.1e-6 in Planck units after quantum corrections.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bases import (
    BasisKind,
    BosonRegister,
    apply_scalar_function,
    build_momentum,
    build_momentum_squared,
    build_position,
    hermitize,
    lift_to_mode,
)
from .errors import ConfigError, DomainError, InconsistentInitialDataError, ShapeError


# ---------------------------------------------------------------------------
# parameters

@dataclass(frozen=True)
class StarobinskyParams:
    """Plateau inflation potential V = M1_4 * (1 - exp(phi / M2))^2.

    The default slope makes the curvature at the bottom of the well exactly
    one, i.e. M2 = sqrt(2 * M1_4).
    """

    M1_4: float = 29.167
    M2: float = float(np.sqrt(2 * 29.167))


@dataclass(frozen=True)
class DarkEnergySingleRadiusParams:
    """Flux/curvature/vacuum landscape of one compact radius.

    V(phi) = e^{-4 phi/c} (Q4_sq e^{-8 phi/c} - k e^{-2 phi/c} + Lambda8).
    Defaults place the local minimum at V = -0.3785 with curvature 0.5844,
    which the zero-point energy lifts to a residual of ~1.1e-6.
    """

    Q4_sq: float = 100.0
    k: float = 200.0
    c: float = float(np.sqrt(2100.0))
    Lambda8: float = 118.455752797


@dataclass(frozen=True)
class DarkEnergyTwoRadiusParams:
    """Two independent compact radii (product of two 2-spheres).

    The fluxes through the two spheres are configuration inputs; the defaults
    reuse the single-radius flux for both and make the potential symmetric
    under swapping the radii.
    """

    mu1_4: float = 200.0
    mu2: float = 8.0
    Q1_sq: float = 100.0
    Q2_sq: float = 100.0
    Lambda8: float = 118.455752797


@dataclass(frozen=True)
class DarkMatterParams:
    """Couplings of the two-field dark sector models.

    ``lambda_*`` drive the conformally-coupled scalar model; ``g_X``/``g_Y``
    and ``theta_Y`` drive the self-interacting gauge-field model. The gauge
    couplings have no canonical benchmark value and should be configured per
    run.
    """

    lambda_X: float = 0.005
    lambda_Y: float = 0.005
    lambda_mix: float = 0.001
    a_scale: float = 1.0
    g_X: float = 0.1
    g_Y: float = 0.1
    theta_Y: float = 0.0


class MinisuperspaceKind(enum.Enum):
    INV_LIOUVILLE = "inv-liouville"
    INV_OSCILLATOR = "inv-oscillator"
    INV_LINEAR = "inv-linear"
    INV_QUARTIC = "inv-quartic"
    MORSE_S2 = "morse-s2"
    NEG_LAMBDA_MORSE = "neg-lambda-morse"
    KANTOWSKI_SACHS = "kantowski-sachs"


_DEFAULT_VOLUME = {
    MinisuperspaceKind.INV_LIOUVILLE: (2 * np.pi) ** 3,
    MinisuperspaceKind.INV_OSCILLATOR: (2 * np.pi) ** 3,
    MinisuperspaceKind.INV_LINEAR: 2 * np.pi**2,
    MinisuperspaceKind.INV_QUARTIC: 2 * np.pi**2,
    MinisuperspaceKind.MORSE_S2: 4 * np.pi,
    MinisuperspaceKind.NEG_LAMBDA_MORSE: 4 * np.pi,
    MinisuperspaceKind.KANTOWSKI_SACHS: 8 * np.pi**2,
}


@dataclass(frozen=True)
class MinisuperspaceParams:
    """Gravitational sector constants for the reduced one-dimensional models.

    ``v_volume`` is the comoving spatial volume; if None the conventional
    volume of the model's spatial topology is used. ``p_phi`` is the scalar
    momentum, entering as a c-number after separation of variables.
    """

    Lambda: float = 1.0
    k_curv: float = 1.0
    v_volume: float | None = None
    p_phi: float = 0.0

    def volume(self, kind: MinisuperspaceKind) -> float:
        return self.v_volume if self.v_volume is not None else _DEFAULT_VOLUME[kind]


# ---------------------------------------------------------------------------
# classical potentials

def starobinsky_potential(params: StarobinskyParams):
    def v(phi):
        return params.M1_4 * (1.0 - np.exp(phi / params.M2)) ** 2
    return v


def starobinsky_potential_deriv(params: StarobinskyParams):
    def dv(phi):
        e = np.exp(phi / params.M2)
        return -2.0 * params.M1_4 * (1.0 - e) * e / params.M2
    return dv


def dark_energy_potential(params: DarkEnergySingleRadiusParams):
    def v(phi):
        u = phi / params.c
        return np.exp(-4.0 * u) * (
            params.Q4_sq * np.exp(-8.0 * u) - params.k * np.exp(-2.0 * u) + params.Lambda8
        )
    return v


def _radius_exponents(params: DarkEnergyTwoRadiusParams):
    """Linear maps phi -> log R for the two-radius field redefinition."""
    kappa = (np.sqrt(3.0) - 1.0) / (2.0 * np.sqrt(6.0))
    alpha = (1.0 / np.sqrt(2.0) - kappa) / params.mu2
    beta = -kappa / params.mu2
    return alpha, beta


def dark_energy_two_radius_potential(params: DarkEnergyTwoRadiusParams):
    """V(phi1, phi2) built by substituting R1, R2 into the radius potential."""
    alpha, beta = _radius_exponents(params)

    def v(phi1, phi2):
        l1 = alpha * phi1 + beta * phi2
        l2 = beta * phi1 + alpha * phi2
        r1_sq, r2_sq = np.exp(2.0 * l1), np.exp(2.0 * l2)
        return (
            params.mu1_4
            / (r1_sq * r2_sq)
            * (
                params.Q1_sq / r1_sq**2
                + params.Q2_sq / r2_sq**2
                - 1.0 / r1_sq
                - 1.0 / r2_sq
                + params.Lambda8
            )
        )
    return v


def minisuperspace_v_eff(kind: MinisuperspaceKind, params: MinisuperspaceParams):
    """Effective one-dimensional potential for H = P^2/2 + V_eff(X).

    Overall constraint prefactors (-1/(6v) and relatives) are dropped; the
    zero-energy solution set is unchanged for every kind.
    """
    v = params.volume(kind)
    lam, k, p = params.Lambda, params.k_curv, params.p_phi

    if kind is MinisuperspaceKind.INV_LIOUVILLE:
        return lambda x: -3.0 * p**2 - 6.0 * v**2 * lam * np.exp(6.0 * x)
    if kind is MinisuperspaceKind.INV_OSCILLATOR:
        return lambda x: -(4.0 / 3.0) * p**2 / x**2 - (8.0 / 3.0) * v**2 * lam * x**2
    if kind is MinisuperspaceKind.INV_LINEAR:
        return lambda x: 4.5 * v**2 * k - 0.75 * p**2 / x**2 - 1.5 * v**2 * lam * x
    if kind is MinisuperspaceKind.INV_QUARTIC:
        return lambda x: 18.0 * v**2 * k * x**2 - 3.0 * p**2 / x**2 - 6.0 * v**2 * lam * x**4
    if kind in (MinisuperspaceKind.MORSE_S2, MinisuperspaceKind.NEG_LAMBDA_MORSE):
        return lambda x: 2.0 * v**2 * k * np.exp(2.0 * x) - 2.0 * v**2 * lam * np.exp(4.0 * x) - p**2
    if kind is MinisuperspaceKind.KANTOWSKI_SACHS:
        return lambda x: 2.0 * v**2 * k * np.exp(2.0 * x) - p**2 / 2.0
    raise ShapeError(f"unknown minisuperspace kind {kind!r}")


# ---------------------------------------------------------------------------
# Hamiltonians

def _single_mode_xp(basis: BasisKind, dim: int):
    x = build_position(basis, dim)
    p_sq = build_momentum_squared(basis, dim)
    return x, p_sq


def starobinsky_hamiltonian(
    params: StarobinskyParams, n_qubits: int, basis: BasisKind = BasisKind.OSCILLATOR
) -> np.ndarray:
    dim = 2**n_qubits
    x, p_sq = _single_mode_xp(basis, dim)
    return hermitize(p_sq / 2.0 + apply_scalar_function(x, starobinsky_potential(params)))


def dark_energy_single_radius(
    params: DarkEnergySingleRadiusParams,
    n_qubits: int,
    basis: BasisKind = BasisKind.OSCILLATOR,
) -> np.ndarray:
    dim = 2**n_qubits
    x, p_sq = _single_mode_xp(basis, dim)
    return hermitize(p_sq / 2.0 + apply_scalar_function(x, dark_energy_potential(params)))


def dark_energy_two_radius(
    params: DarkEnergyTwoRadiusParams,
    qubits_per_mode: int,
    basis: BasisKind = BasisKind.OSCILLATOR,
) -> np.ndarray:
    """Two-field Hamiltonian (P1^2 + P2^2)/2 + V(phi1, phi2).

    Every term of the potential is exp(linear in phi1, phi2), so it factors
    into a Kronecker product of single-mode matrix exponentials and the
    construction stays exact.
    """
    dim = 2**qubits_per_mode
    reg = BosonRegister((dim, dim))
    x, p_sq = _single_mode_xp(basis, dim)
    alpha, beta = _radius_exponents(params)

    # weights and (l1, l2) exponent multiples for the five potential terms
    pieces = [
        (params.mu1_4 * params.Q1_sq, -6.0, -2.0),
        (params.mu1_4 * params.Q2_sq, -2.0, -6.0),
        (-params.mu1_4, -4.0, -2.0),
        (-params.mu1_4, -2.0, -4.0),
        (params.mu1_4 * params.Lambda8, -2.0, -2.0),
    ]
    h = lift_to_mode(p_sq / 2.0, 0, reg) + lift_to_mode(p_sq / 2.0, 1, reg)
    for weight, a, b in pieces:
        c1 = a * alpha + b * beta
        c2 = a * beta + b * alpha
        e1 = apply_scalar_function(x, lambda t, c1=c1: np.exp(c1 * t))
        e2 = apply_scalar_function(x, lambda t, c2=c2: np.exp(c2 * t))
        h = h + weight * np.kron(e1, e2)
    return hermitize(h)


def dark_matter_model_one(
    params: DarkMatterParams,
    qubits_per_mode: int,
    basis: BasisKind = BasisKind.OSCILLATOR,
) -> np.ndarray:
    """Conformally coupled scalars: two quartic oscillators with an x^4 y^4 bridge."""
    dim = 2**qubits_per_mode
    reg = BosonRegister((dim, dim))
    x, p_sq = _single_mode_xp(basis, dim)
    x4 = np.linalg.matrix_power(x, 4)
    h_x = p_sq / 2.0 + x @ x / 2.0 + params.lambda_X * x4
    h_y = p_sq / 2.0 + x @ x / 2.0 + params.lambda_Y * x4
    mix = (params.lambda_mix / params.a_scale**4) * np.kron(x4, x4)
    return hermitize(lift_to_mode(h_x, 0, reg) + lift_to_mode(h_y, 1, reg) + mix)


def dark_matter_model_two(
    params: DarkMatterParams,
    qubits_per_mode: int,
    basis: BasisKind = BasisKind.OSCILLATOR,
) -> np.ndarray:
    """Self-interacting gauge fields in the single-mode ansatz.

    Products of non-commuting single-mode factors are symmetrized, so the
    result is Hermitian for any parameter values. With theta_Y = 0 this is
    P_X^2/2 + g_X^2 X^4 + P_Y^2/2 + g_Y^2 Y^4
    + (lambda_mix/a^4) (P_X + X^2)^2 (P_Y + Y^2)^2.
    """
    dim = 2**qubits_per_mode
    reg = BosonRegister((dim, dim))
    x = build_position(basis, dim)
    p = build_momentum(basis, dim)
    x2 = x @ x
    x4 = x2 @ x2
    theta = params.theta_Y

    h_x = p @ p / 2.0 + params.g_X**2 * x4

    p_shift = p + theta * x2            # P_Y + theta Y^2, Hermitian
    h_y = p_shift @ p_shift / 2.0 + params.g_Y**2 * x4
    # theta * (P_Y + theta Y^2) Y^2, symmetrized over the two orderings
    h_y = h_y + theta * (p_shift @ x2 + x2 @ p_shift) / 2.0

    a_sq = (p + x2) @ (p + x2)
    b = p_shift + x2                    # P_Y + theta Y^2 + Y^2
    b_sq = b @ b
    mix = (params.lambda_mix / params.a_scale**4) * np.kron(a_sq, b_sq)

    return hermitize(lift_to_mode(h_x, 0, reg) + lift_to_mode(h_y, 1, reg) + mix)


def minisuperspace_hamiltonian(
    kind: MinisuperspaceKind,
    params: MinisuperspaceParams,
    n_qubits: int,
    basis: BasisKind = BasisKind.FINITE_DIFFERENCE,
) -> np.ndarray:
    dim = 2**n_qubits
    x, p_sq = _single_mode_xp(basis, dim)
    v_eff = minisuperspace_v_eff(kind, params)
    return hermitize(p_sq / 2.0 + apply_scalar_function(x, v_eff))


# ---------------------------------------------------------------------------
# classical Friedmann evolution

@dataclass
class FriedmannTrajectory:
    t: np.ndarray
    a: np.ndarray
    phi: np.ndarray
    phi_dot: np.ndarray
    constraint_residual: np.ndarray

    @property
    def max_constraint_residual(self) -> float:
        return float(np.max(self.constraint_residual))


def friedmann_evolve(
    potential,
    initial,
    Lambda: float = 0.0,
    k: float = 0.0,
    t_span=(0.0, 10.0),
    dt: float = 1e-3,
    dpotential=None,
) -> FriedmannTrajectory:
    """Integrate the scalar-field Friedmann system in cosmic time (N = 1).

    The expansion rate is taken from the energy constraint at every stage,
    3 (adot/a)^2 = Lambda + phidot^2/2 + V(phi) - 3k/a^2 (positive branch),
    and the field obeys phidot' = -3 (adot/a) phidot - dV/dphi. Fixed-step
    fourth-order Runge-Kutta.
    """
    a0, phi0, phidot0 = (float(x) for x in initial)
    if a0 <= 0:
        raise InconsistentInitialDataError("a0 must be positive")
    if dt <= 0:
        raise DomainError("dt must be positive")
    t0, t1 = (0.0, float(t_span)) if np.isscalar(t_span) else map(float, t_span)

    if dpotential is None:
        def dpotential(phi, _v=potential):
            h = 1e-6 * (1.0 + abs(phi))
            return (_v(phi + h) - _v(phi - h)) / (2.0 * h)

    def radicand(a, phi, phidot):
        return Lambda + 0.5 * phidot**2 + potential(phi) - 3.0 * k / a**2

    def hubble(a, phi, phidot, initial_point=False):
        rad = radicand(a, phi, phidot)
        if rad < -1e-8 and initial_point:
            raise InconsistentInitialDataError(
                f"energy constraint violated at t=0 (radicand {rad:.3e})"
            )
        if rad < -1e-8:
            raise DomainError(f"expansion rate became imaginary (radicand {rad:.3e})")
        return np.sqrt(max(rad, 0.0) / 3.0)

    hubble(a0, phi0, phidot0, initial_point=True)

    def rhs(state):
        a, phi, phidot = state
        h = hubble(a, phi, phidot)
        return np.array([a * h, phidot, -3.0 * h * phidot - dpotential(phi)])

    n_steps = int(np.ceil((t1 - t0) / dt))
    ts = np.empty(n_steps + 1)
    traj = np.empty((n_steps + 1, 3))
    ts[0] = t0
    traj[0] = (a0, phi0, phidot0)
    state = traj[0].copy()
    for i in range(n_steps):
        step = min(dt, t1 - ts[i])
        k1 = rhs(state)
        k2 = rhs(state + 0.5 * step * k1)
        k3 = rhs(state + 0.5 * step * k2)
        k4 = rhs(state + step * k3)
        state = state + (step / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        ts[i + 1] = ts[i] + step
        traj[i + 1] = state

    a, phi, phidot = traj[:, 0], traj[:, 1], traj[:, 2]
    hub = np.array([hubble(*row) for row in traj])
    residual = np.abs(
        -3.0 * hub**2 - 3.0 * k / a**2 + Lambda + 0.5 * phidot**2
        + np.array([potential(p) for p in phi])
    )
    return FriedmannTrajectory(ts, a, phi, phidot, residual)


# ---------------------------------------------------------------------------
# JSON model-config interface

_PARAM_CLASSES = {
    "starobinsky": StarobinskyParams,
    "dark_energy_1r": DarkEnergySingleRadiusParams,
    "dark_energy_2r": DarkEnergyTwoRadiusParams,
    "dark_matter_1": DarkMatterParams,
    "dark_matter_2": DarkMatterParams,
    "minisuperspace": MinisuperspaceParams,
}

_BASIS_NAMES = {b.value: b for b in BasisKind}


def params_from_dict(model: str, raw: dict):
    """Instantiate the model's parameter dataclass, rejecting unknown keys."""
    if model not in _PARAM_CLASSES:
        raise ConfigError(f"unknown model {model!r}; known: {sorted(_PARAM_CLASSES)}")
    cls = _PARAM_CLASSES[model]
    raw = dict(raw or {})
    kind = raw.pop("kind", None)
    fields = {f for f in cls.__dataclass_fields__}
    unknown = set(raw) - fields
    if unknown:
        raise ConfigError(f"unknown parameter keys for {model}: {sorted(unknown)}")
    params = cls(**raw)
    if model == "minisuperspace":
        if kind is None:
            raise ConfigError("minisuperspace model requires params.kind")
        try:
            kind = MinisuperspaceKind(kind)
        except ValueError as exc:
            raise ConfigError(f"unknown minisuperspace kind {kind!r}") from exc
        return params, kind
    if kind is not None:
        raise ConfigError("'kind' is only valid for the minisuperspace model")
    return params, None


def build_model(config: dict) -> tuple[np.ndarray, dict]:
    """Assemble a Hamiltonian from {"model", "params", "qubits", "basis"}.

    Returns the matrix plus the fully resolved configuration (defaults filled
    in), which callers embed in their output artifacts.
    """
    allowed = {"model", "params", "qubits", "basis"}
    unknown = set(config) - allowed
    if unknown:
        raise ConfigError(f"unknown model-config keys: {sorted(unknown)}")
    model = config.get("model")
    qubits = config.get("qubits")
    basis_name = config.get("basis", "oscillator")
    if basis_name not in _BASIS_NAMES:
        raise ConfigError(f"unknown basis {basis_name!r}; known: {sorted(_BASIS_NAMES)}")
    basis = _BASIS_NAMES[basis_name]
    if not isinstance(qubits, (list, tuple)) or not qubits or not all(
        isinstance(q, int) and q >= 1 for q in qubits
    ):
        raise ConfigError("qubits must be a non-empty list of positive integers")

    params, kind = params_from_dict(model, config.get("params"))

    one_mode = {"starobinsky", "dark_energy_1r", "minisuperspace"}
    if model in one_mode and len(qubits) != 1:
        raise ConfigError(f"{model} takes a single qubit count")
    if model not in one_mode and len(qubits) != 2:
        raise ConfigError(f"{model} takes two qubit counts")
    if model not in one_mode and qubits[0] != qubits[1]:
        raise ConfigError(f"{model} uses equal qubits per mode")

    if model == "starobinsky":
        h = starobinsky_hamiltonian(params, qubits[0], basis)
    elif model == "dark_energy_1r":
        h = dark_energy_single_radius(params, qubits[0], basis)
    elif model == "dark_energy_2r":
        h = dark_energy_two_radius(params, qubits[0], basis)
    elif model == "dark_matter_1":
        h = dark_matter_model_one(params, qubits[0], basis)
    elif model == "dark_matter_2":
        h = dark_matter_model_two(params, qubits[0], basis)
    else:
        h = minisuperspace_hamiltonian(kind, params, qubits[0], basis)

    resolved_params = {f: getattr(params, f) for f in params.__dataclass_fields__}
    if kind is not None:
        resolved_params["kind"] = kind.value
    resolved = {
        "model": model,
        "params": resolved_params,
        "qubits": list(qubits),
        "basis": basis.value,
    }
    return h, resolved
