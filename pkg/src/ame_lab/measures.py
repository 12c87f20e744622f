"""Reduced states, partial transposition and bipartite entanglement measures.

All entropies and measures are in bits (base-2 logarithms).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from . import numerics
from .errors import EmptySubset, IndexOutOfRange, NotPSD
from .states import DensityMatrix, PureState, density

# Eigenvalues in [-CLAMP_TOL, 0] are rounding noise; anything lower is a bug.
CLAMP_TOL = 1e-10

_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _check_indices(indices: Iterable[int], n: int) -> tuple[int, ...]:
    idx = tuple(sorted(set(int(i) for i in indices)))
    for i in idx:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"qubit index {i} outside 1..{n}")
    return idx


@dataclass(frozen=True)
class Bipartition:
    num_qubits: int
    subset_a: tuple[int, ...]

    def __post_init__(self):
        a = _check_indices(self.subset_a, self.num_qubits)
        if len(a) != len(tuple(self.subset_a)):
            raise IndexOutOfRange(f"duplicate indices in {self.subset_a}")
        if not 1 <= len(a) <= self.num_qubits - 1:
            raise EmptySubset(
                f"subset A must hold between 1 and {self.num_qubits - 1} qubits, got {len(a)}"
            )
        object.__setattr__(self, "subset_a", a)

    @property
    def subset_b(self) -> tuple[int, ...]:
        return tuple(q for q in range(1, self.num_qubits + 1) if q not in self.subset_a)

    @property
    def m(self) -> int:
        return len(self.subset_a)

    def swapped(self) -> "Bipartition":
        return Bipartition(self.num_qubits, self.subset_b)

    def label(self) -> str:
        return "-".join(str(q) for q in self.subset_a)


class CoherentInfo(NamedTuple):
    a_to_b: float
    b_to_a: float
    max: float


@dataclass(frozen=True)
class MeasureRecord:
    log_negativity: float
    coherent_info_a_to_b: float
    coherent_info_b_to_a: float

    @property
    def coherent_info_max(self) -> float:
        return max(self.coherent_info_a_to_b, self.coherent_info_b_to_a)


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every qubit not listed in ``keep``.

    Kept qubits retain their relative order from the original register.
    """
    n = rho.num_qubits
    keep = _check_indices(keep, n)
    if not keep:
        raise EmptySubset("cannot keep an empty set of qubits")
    if len(keep) == n:
        return rho
    rows = list(_LETTERS[:n])
    cols = list(_LETTERS[n : 2 * n])
    for q in range(1, n + 1):
        if q not in keep:
            cols[q - 1] = rows[q - 1]
    out = "".join(rows[q - 1] for q in keep) + "".join(cols[q - 1] for q in keep)
    t = rho.matrix.reshape((2,) * (2 * n))
    reduced = np.einsum("".join(rows) + "".join(cols) + "->" + out, t)
    d = 2 ** len(keep)
    return DensityMatrix(len(keep), reduced.reshape(d, d))


def partial_transpose_indices(matrix: np.ndarray, num_qubits: int, qubits: Iterable[int]) -> np.ndarray:
    """Transpose the row/column indices of the listed qubits of a 2^n x 2^n matrix."""
    n = num_qubits
    perm = list(range(2 * n))
    for q in _check_indices(qubits, n):
        perm[q - 1], perm[n + q - 1] = n + q - 1, q - 1
    t = np.asarray(matrix).reshape((2,) * (2 * n))
    d = 2**n
    return t.transpose(perm).reshape(d, d)


def partial_transpose(rho: DensityMatrix, part: Bipartition) -> np.ndarray:
    """Partial transpose over subsystem B of ``part``."""
    if part.num_qubits != rho.num_qubits:
        raise IndexOutOfRange(
            f"bipartition of {part.num_qubits} qubits applied to {rho.num_qubits}-qubit state"
        )
    return partial_transpose_indices(rho.matrix, rho.num_qubits, part.subset_b)


def clamped_spectrum(rho: DensityMatrix) -> np.ndarray:
    w = rho.spectrum()
    if w[0] < -CLAMP_TOL:
        raise NotPSD(f"density matrix has eigenvalue {w[0]:.3e} < -{CLAMP_TOL:.0e}", float(w[0]))
    return np.clip(w, 0.0, None)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    w = clamped_spectrum(rho)
    w = w[w > 0]
    s = float(-np.sum(w * np.log2(w)))
    return min(max(s, 0.0), float(rho.num_qubits))


def log_negativity(rho: DensityMatrix, part: Bipartition) -> float:
    return float(np.log2(numerics.trace_norm_hermitian(partial_transpose(rho, part))))


def coherent_information(rho: DensityMatrix, part: Bipartition) -> CoherentInfo:
    """Both directed coherent informations across ``part`` and their maximum."""
    s_ab = von_neumann_entropy(rho)
    s_a = von_neumann_entropy(partial_trace(rho, part.subset_a))
    s_b = von_neumann_entropy(partial_trace(rho, part.subset_b))
    a_to_b, b_to_a = s_b - s_ab, s_a - s_ab
    return CoherentInfo(a_to_b, b_to_a, max(a_to_b, b_to_a))


def measure(rho: DensityMatrix, part: Bipartition, s_ab: float | None = None) -> MeasureRecord:
    """Log-negativity and coherent informations of one cut.

    ``s_ab`` may be passed in when the joint entropy is shared across many cuts.
    """
    if s_ab is None:
        s_ab = von_neumann_entropy(rho)
    s_a = von_neumann_entropy(partial_trace(rho, part.subset_a))
    s_b = von_neumann_entropy(partial_trace(rho, part.subset_b))
    return MeasureRecord(log_negativity(rho, part), s_b - s_ab, s_a - s_ab)


@dataclass(frozen=True)
class CutEntropy:
    subset: tuple[int, ...]
    entropy: float

    @property
    def deficit(self) -> float:
        return len(self.subset) - self.entropy


def cut_entropies(s: PureState) -> list[CutEntropy]:
    """Entropy of every subset of size 1..floor(n/2), lexicographic within each size."""
    rho = density(s)
    n = s.num_qubits
    out = []
    for m in range(1, n // 2 + 1):
        for a in combinations(range(1, n + 1), m):
            out.append(CutEntropy(a, von_neumann_entropy(partial_trace(rho, a))))
    return out


def is_ame(s: PureState, tol: float = 1e-9) -> bool:
    return all(c.entropy >= len(c.subset) - tol for c in cut_entropies(s))
