"""Hybrid variational loop and the exact dense eigensolver oracle."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

import numpy as np

from . import optimizers, pauli
from .bases import require_hermitian
from .circuits import AnsatzSpec, apply_circuit, efficient_su2_ansatz, expectation_dense
from .errors import ShapeError


class OptimizerKind(enum.Enum):
    NELDER_MEAD = "nelder-mead"
    COBYLA = "cobyla"
    GRADIENT_DESCENT = "gradient-descent"


@dataclass(frozen=True)
class OptimizerConfig:
    kind: OptimizerKind = OptimizerKind.GRADIENT_DESCENT
    budget: int = 600
    tol: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.budget < 1:
            raise ShapeError("budget must be >= 1")


@dataclass
class VqeResult:
    energy: float
    params: np.ndarray
    trace: list[tuple[int, float]] = field(default_factory=list)
    wall_time: float = 0.0
    converged: bool = False
    n_evals: int = 0
    eval_times: list[float] = field(default_factory=list)  # cumulative seconds


_MINIMIZERS = {
    OptimizerKind.NELDER_MEAD: optimizers.nelder_mead,
    OptimizerKind.COBYLA: optimizers.cobyla_linear,
    OptimizerKind.GRADIENT_DESCENT: optimizers.gradient_descent,
}


def exact_ground(h: np.ndarray) -> tuple[float, np.ndarray]:
    """Smallest eigenvalue and its normalized eigenvector."""
    h = require_hermitian(np.asarray(h, dtype=complex))
    w, v = np.linalg.eigh(h)
    return float(w[0]), v[:, 0]


def run_vqe(hamiltonian, ansatz: AnsatzSpec, opt: OptimizerConfig) -> VqeResult:
    """Minimize the circuit expectation value of ``hamiltonian``.

    ``hamiltonian`` may be a dense Hermitian matrix or a PauliSum; initial
    parameters are drawn uniformly from [-pi, pi) with the seeded generator,
    so a fixed (seed, optimizer, budget) triple reproduces the run exactly.
    The returned trace holds the best-so-far energy at each evaluation.
    """
    circuit = efficient_su2_ansatz(ansatz)
    if isinstance(hamiltonian, pauli.PauliSum):
        if hamiltonian.n_qubits != ansatz.n_qubits:
            raise ShapeError("hamiltonian and ansatz qubit counts differ")

        def energy(theta):
            return pauli.expectation(hamiltonian, apply_circuit(circuit, theta))
    else:
        h = require_hermitian(np.asarray(hamiltonian, dtype=complex))
        if h.shape[0] != 2**ansatz.n_qubits:
            raise ShapeError("hamiltonian and ansatz dimensions differ")

        def energy(theta):
            return expectation_dense(h, apply_circuit(circuit, theta))

    # budgets below n_params + 1 cannot converge but still yield a valid
    # partial result (converged=False)
    rng = np.random.default_rng(opt.seed)
    theta0 = rng.uniform(-np.pi, np.pi, circuit.n_params)

    start = time.perf_counter()
    eval_times: list[float] = []

    def timed_energy(theta):
        val = energy(theta)
        eval_times.append(time.perf_counter() - start)
        return val

    res = _MINIMIZERS[opt.kind](timed_energy, theta0, budget=opt.budget, tol=opt.tol)
    elapsed = time.perf_counter() - start

    trace = []
    best = np.inf
    for i, val in enumerate(res.history):
        best = min(best, val)
        trace.append((i, best))
    return VqeResult(
        energy=res.fun,
        params=res.x,
        trace=trace,
        wall_time=elapsed,
        converged=res.converged,
        n_evals=res.n_evals,
        eval_times=eval_times,
    )
