"""Pauli-sum decomposition of Hermitian operators on n qubits.

A Hermitian 2^n x 2^n matrix expands uniquely as sum_P c_P * P over the 4^n
tensor products of {I, X, Y, Z}, with c_P = Tr(P H) / 2^n real. Labels are
strings over "IXYZ" with qubit 0 the leftmost character (most significant
bit of the state index).

The transform is computed one qubit at a time on the reshaped coefficient
tensor, so no 2^n x 2^n Pauli string is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import HermiticityError, ShapeError
from .bases import require_hermitian

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_LABELS = "IXYZ"

# W[s, 2j+k] = P_s[k, j]: contracts one (row, col) qubit index pair into a
# Pauli-coefficient axis (trace convention Tr(P H)).
_W = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1j, -1j, 0],
        [1, 0, 0, -1],
    ],
    dtype=complex,
)
# V[2j+k, s] = P_s[j, k]: inverse direction, Pauli axis back to matrix indices.
_V = np.array(
    [
        [1, 0, 0, 1],
        [0, 1, -1j, 0],
        [0, 1, 1j, 0],
        [1, 0, 0, -1],
    ],
    dtype=complex,
)


@dataclass(frozen=True)
class PauliTerm:
    coeff: float
    label: str


@dataclass
class PauliSum:
    """Weighted Pauli labels representing a Hermitian operator."""

    n_qubits: int
    terms: list[PauliTerm] = field(default_factory=list)
    zero_tol: float = 1e-12

    def __post_init__(self):
        seen = set()
        for t in self.terms:
            if len(t.label) != self.n_qubits or any(c not in _LABELS for c in t.label):
                raise ShapeError(f"bad label {t.label!r} for {self.n_qubits} qubits")
            if t.label in seen:
                raise ShapeError(f"duplicate label {t.label!r}")
            seen.add(t.label)

    def __len__(self):
        return len(self.terms)

    def to_text(self) -> str:
        """One term per line, ``coeff LABEL``, 17 significant digits."""
        return "\n".join(f"{t.coeff:.17g} {t.label}" for t in self.terms)

    @classmethod
    def from_text(cls, text: str, zero_tol: float = 1e-12) -> "PauliSum":
        terms = []
        n_qubits = None
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            coeff, label = line.split()
            if n_qubits is None:
                n_qubits = len(label)
            terms.append(PauliTerm(float(coeff), label))
        if n_qubits is None:
            raise ShapeError("empty Pauli-sum text")
        return cls(n_qubits=n_qubits, terms=terms, zero_tol=zero_tol)


def _n_qubits_of(dim: int) -> int:
    n = int(round(np.log2(dim)))
    if 2**n != dim:
        raise ShapeError(f"dimension {dim} is not a power of 2")
    return n


def _pauli_transform(mat: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Apply the per-qubit 4x4 kernel along every qubit axis."""
    n = _n_qubits_of(mat.shape[0]) if mat.ndim == 2 else mat.ndim
    if mat.ndim == 2:
        t = mat.reshape((2,) * (2 * n))
        # interleave (row_q, col_q) pairs then merge each pair into one axis
        order = [ax for q in range(n) for ax in (q, n + q)]
        t = t.transpose(order).reshape((4,) * n)
    else:
        t = mat
    for ax in range(n):
        t = np.moveaxis(np.tensordot(kernel, t, axes=([1], [ax])), 0, ax)
    return t


def decompose(h: np.ndarray, zero_tol: float = 1e-12) -> PauliSum:
    """Expand a Hermitian matrix in the Pauli basis, dropping tiny terms."""
    h = np.asarray(h, dtype=complex)
    n = _n_qubits_of(h.shape[0])
    require_hermitian(h)
    coeffs = _pauli_transform(h, _W).reshape(-1) / h.shape[0]
    max_imag = np.max(np.abs(coeffs.imag)) if coeffs.size else 0.0
    if max_imag > 1e-10 * max(1.0, np.max(np.abs(coeffs))):
        raise HermiticityError(f"complex Pauli coefficient ({max_imag:.3e}) from Hermitian input")
    terms = []
    for flat_index in np.nonzero(np.abs(coeffs) > zero_tol)[0]:
        digits = np.base_repr(flat_index, 4).zfill(n)
        label = "".join(_LABELS[int(d)] for d in digits)
        terms.append(PauliTerm(float(coeffs[flat_index].real), label))
    return PauliSum(n_qubits=n, terms=terms, zero_tol=zero_tol)


def reconstruct(s: PauliSum) -> np.ndarray:
    """Dense matrix sum_t coeff_t * (tensor product of Pauli factors)."""
    n = s.n_qubits
    coeffs = np.zeros((4,) * n, dtype=complex)
    for t in s.terms:
        idx = tuple(_LABELS.index(c) for c in t.label)
        coeffs[idx] = t.coeff
    t = _pauli_transform(coeffs, _V)
    # split each merged (row, col) axis back out and deinterleave
    t = t.reshape((2,) * (2 * n))
    rows = [2 * q for q in range(n)]
    cols = [2 * q + 1 for q in range(n)]
    return t.transpose(rows + cols).reshape(2**n, 2**n)


def _term_masks(label: str) -> tuple[int, int, int, complex]:
    """Bit masks (flip, y, z) and the global i^(#Y) phase for one label."""
    n = len(label)
    flip = y_mask = z_mask = 0
    ny = 0
    for q, ch in enumerate(label):
        bit = 1 << (n - 1 - q)
        if ch == "X":
            flip |= bit
        elif ch == "Y":
            flip |= bit
            y_mask |= bit
            ny += 1
        elif ch == "Z":
            z_mask |= bit
    return flip, y_mask, z_mask, 1j**ny


def _popcount(arr: np.ndarray) -> np.ndarray:
    out = np.zeros_like(arr)
    work = arr.copy()
    while np.any(work):
        out += work & 1
        work >>= 1
    return out


def expectation(s: PauliSum, psi: np.ndarray) -> float:
    """<psi| sum_t c_t P_t |psi>, evaluated term by term with bit masks.

    Amplitude convention per qubit: X|b> = |1-b>, Y|b> = i(-1)^b |1-b>,
    Z|b> = (-1)^b |b>, so P|j> = phase(j) |j ^ flip>.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (2**s.n_qubits,):
        raise ShapeError(f"state length {psi.shape} does not match {s.n_qubits} qubits")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-10:
        raise ShapeError(f"state norm {norm} is not 1")
    j = np.arange(psi.size)
    total = 0.0 + 0.0j
    for t in s.terms:
        flip, y_mask, z_mask, phase0 = _term_masks(t.label)
        signs = (-1.0) ** _popcount(j & (y_mask | z_mask))
        amp = phase0 * signs
        total += t.coeff * np.vdot(psi[j ^ flip], amp * psi)
    return float(total.real)
