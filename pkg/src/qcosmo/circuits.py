"""Exact statevector simulation of parameterized circuits.

Gate set: Ry/Rz rotations (slot-indexed parameters), CNOT, and X. Rotation
conventions are Ry(t) = exp(-i t Y / 2), Rz(t) = exp(-i t Z / 2). Qubit 0 is
the leftmost tensor factor, i.e. the most significant bit of the state index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import ShapeError
from .bases import require_hermitian


class Gate(NamedTuple):
    name: str          # "ry" | "rz" | "cnot" | "x"
    qubit: int
    target: int = -1   # cnot target
    slot: int = -1     # parameter slot for rotations


@dataclass
class Circuit:
    n_qubits: int
    gates: list[Gate] = field(default_factory=list)
    n_params: int = 0

    def ry(self, qubit: int) -> "Circuit":
        self.gates.append(Gate("ry", qubit, slot=self.n_params))
        self.n_params += 1
        return self

    def rz(self, qubit: int) -> "Circuit":
        self.gates.append(Gate("rz", qubit, slot=self.n_params))
        self.n_params += 1
        return self

    def cnot(self, control: int, target: int) -> "Circuit":
        self.gates.append(Gate("cnot", control, target=target))
        return self

    def x(self, qubit: int) -> "Circuit":
        self.gates.append(Gate("x", qubit))
        return self

    def dump(self) -> str:
        """Debug listing, one gate per line: ``RY q0 p3`` / ``CNOT q0 q1``."""
        lines = []
        for g in self.gates:
            if g.name in ("ry", "rz"):
                lines.append(f"{g.name.upper()} q{g.qubit} p{g.slot}")
            elif g.name == "cnot":
                lines.append(f"CNOT q{g.qubit} q{g.target}")
            else:
                lines.append(f"X q{g.qubit}")
        return "\n".join(lines)


@dataclass(frozen=True)
class AnsatzSpec:
    """Layout of the hardware-efficient ansatz."""

    n_qubits: int
    reps: int = 3
    rotations: tuple[str, ...] = ("ry", "rz")
    entanglement: str = "full"

    def __post_init__(self):
        if self.reps < 1:
            raise ShapeError("reps must be >= 1")
        if self.entanglement != "full":
            raise ShapeError("only full entanglement is implemented")
        for r in self.rotations:
            if r not in ("ry", "rz"):
                raise ShapeError(f"unknown rotation {r!r}")


def efficient_su2_ansatz(spec: AnsatzSpec) -> Circuit:
    """(reps+1) rotation layers interleaved with reps full CNOT blocks.

    Each rotation layer applies every rotation kind to every qubit; each
    entanglement block applies CNOT(i, j) for all i < j in lexicographic
    order. Parameter count: n_qubits * len(rotations) * (reps + 1).
    """
    c = Circuit(spec.n_qubits)
    for layer in range(spec.reps + 1):
        for kind in spec.rotations:
            for q in range(spec.n_qubits):
                getattr(c, kind)(q)
        if layer < spec.reps:
            for i in range(spec.n_qubits):
                for j in range(i + 1, spec.n_qubits):
                    c.cnot(i, j)
    return c


def zero_state(n_qubits: int) -> np.ndarray:
    psi = np.zeros(2**n_qubits, dtype=complex)
    psi[0] = 1.0
    return psi


def _apply_single(psi: np.ndarray, n: int, q: int, u: np.ndarray) -> np.ndarray:
    t = psi.reshape(2**q, 2, -1)
    return np.einsum("ab,ibj->iaj", u, t).reshape(-1)


def _apply_cnot(psi: np.ndarray, n: int, control: int, target: int) -> np.ndarray:
    t = psi.reshape((2,) * n).copy()
    ctrl_one = np.take(t, 1, axis=control)
    # the control axis is gone after take(), so later axes shift down by one
    flipped = np.flip(ctrl_one, axis=target if target < control else target - 1)
    slicer = [slice(None)] * n
    slicer[control] = 1
    t[tuple(slicer)] = flipped
    return t.reshape(-1)


def apply_circuit(circuit: Circuit, params, init: np.ndarray | None = None) -> np.ndarray:
    """Run the circuit on ``init`` (default |0...0>) and return the state."""
    params = np.asarray(params, dtype=float)
    if params.shape != (circuit.n_params,):
        raise ShapeError(
            f"expected {circuit.n_params} parameters, got {params.shape}"
        )
    n = circuit.n_qubits
    psi = zero_state(n) if init is None else np.array(init, dtype=complex)
    if psi.shape != (2**n,):
        raise ShapeError(f"initial state has wrong length {psi.shape}")
    for g in circuit.gates:
        if g.name == "ry":
            t = params[g.slot]
            u = np.array(
                [[np.cos(t / 2), -np.sin(t / 2)], [np.sin(t / 2), np.cos(t / 2)]],
                dtype=complex,
            )
            psi = _apply_single(psi, n, g.qubit, u)
        elif g.name == "rz":
            t = params[g.slot]
            u = np.array([[np.exp(-1j * t / 2), 0], [0, np.exp(1j * t / 2)]])
            psi = _apply_single(psi, n, g.qubit, u)
        elif g.name == "x":
            u = np.array([[0, 1], [1, 0]], dtype=complex)
            psi = _apply_single(psi, n, g.qubit, u)
        elif g.name == "cnot":
            psi = _apply_cnot(psi, n, g.qubit, g.target)
        else:
            raise ShapeError(f"unknown gate {g.name!r}")
    return psi


def expectation_dense(h: np.ndarray, psi: np.ndarray) -> float:
    """Rayleigh quotient <psi|H|psi> for a dense Hermitian H."""
    h = require_hermitian(np.asarray(h, dtype=complex))
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (h.shape[0],):
        raise ShapeError("state/operator dimension mismatch")
    return float(np.vdot(psi, h @ psi).real)
