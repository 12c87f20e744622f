"""Qubit AME states and their local-unitary relatives.

Basis convention: amplitude index ``i`` has binary expansion ``b1 b2 ... bn``
with qubit 1 as the most significant bit, so ``|0>|1>|1>`` is index ``0b011``.
Qubit indices in the public API are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import DimensionMismatch, NotUnitary, QubitOutOfRange

NORM_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PureState:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.num_qubits < 1 or amps.size != 2**self.num_qubits:
            raise DimensionMismatch(
                f"{amps.size} amplitudes do not describe {self.num_qubits} qubits"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalised (<psi|psi> = {norm!r})")
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @classmethod
    def from_terms(cls, num_qubits: int, terms: dict[str, complex]) -> "PureState":
        """Build a state from ``{"01101": coeff, ...}`` bit-string terms."""
        amps = np.zeros(2**num_qubits, dtype=complex)
        for bits, coeff in terms.items():
            if len(bits) != num_qubits:
                raise DimensionMismatch(f"term {bits!r} is not {num_qubits} qubits long")
            amps[int(bits, 2)] += coeff
        return cls(num_qubits, amps)

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    def inner(self, other: "PureState") -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_json(self) -> dict:
        return {
            "num_qubits": self.num_qubits,
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PureState":
        try:
            n = int(obj["num_qubits"])
            amps = [complex(float(re), float(im)) for re, im in obj["amplitudes"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed state object: {exc}") from exc
        return cls(n, np.array(amps, dtype=complex))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on ``num_qubits``.

    Construction checks shape and hermiticity; unit trace and positivity are
    checked by :meth:`validate` since intermediate results (partial traces of
    sub-normalised inputs in tests, for instance) do not always need them.
    """

    num_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        m = numerics.as_matrix(self.matrix)
        d = 2**self.num_qubits
        if m.shape != (d, d):
            raise DimensionMismatch(f"matrix of shape {m.shape} is not {d}x{d}")
        numerics.check_hermitian(m)
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self) -> int:
        return 2**self.num_qubits

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def spectrum(self) -> np.ndarray:
        return numerics.hermitian_spectrum(self.matrix)

    def validate(self, tol: float = 1e-9) -> "DensityMatrix":
        if abs(self.trace() - 1.0) > tol:
            raise ValueError(f"trace {self.trace()!r} differs from 1")
        lo = float(self.spectrum()[0])
        if lo < -tol:
            raise ValueError(f"minimum eigenvalue {lo!r} is negative")
        return self


def bell() -> PureState:
    return PureState.from_terms(2, {"00": 1 / np.sqrt(2), "11": 1 / np.sqrt(2)})


def ghz3() -> PureState:
    return PureState.from_terms(3, {"000": 1 / np.sqrt(2), "111": 1 / np.sqrt(2)})


def ghz(n: int) -> PureState:
    """n-qubit GHZ state; AME only for n <= 3."""
    return PureState.from_terms(n, {"0" * n: 1 / np.sqrt(2), "1" * n: 1 / np.sqrt(2)})


# Term lists of the five-qubit code words, in the order they are usually printed.
_LOGICAL_ZERO_TERMS = (
    "+00000 +10010 +01001 +10100 +01010 -11011 -00110 -11000 "
    "-11101 -00011 -11110 -01111 -10001 -01100 -10111 +00101"
)
_LOGICAL_ONE_TERMS = (
    "+11111 +01101 +10110 +01011 +10101 -00100 -11001 -00111 "
    "-00010 -11100 -00001 -10000 -01110 -10011 -01000 +11010"
)


def _codeword(spec: str) -> PureState:
    terms = {}
    for tok in spec.split():
        terms[tok[1:]] = 0.25 if tok[0] == "+" else -0.25
    if len(terms) != 16:
        raise AssertionError("code word must have 16 distinct terms")
    return PureState.from_terms(5, terms)


def ame5_logical_zero() -> PureState:
    return _codeword(_LOGICAL_ZERO_TERMS)


def ame5_logical_one() -> PureState:
    return _codeword(_LOGICAL_ONE_TERMS)


def phi5() -> PureState:
    """The five-qubit AME state used throughout, identical to the logical zero."""
    return ame5_logical_zero()


def ame6() -> PureState:
    """``(|0>|0_L> + |1>|1_L>)/sqrt(2)`` with the extra qubit as qubit 1."""
    amps = np.concatenate([ame5_logical_zero().amplitudes, ame5_logical_one().amplitudes])
    return PureState(6, amps / np.sqrt(2))


def apply_single_qubit_unitary(s: PureState, qubit: int, u) -> PureState:
    """Apply the 2x2 unitary ``u`` to the tensor factor ``qubit`` (1-based)."""
    u = numerics.as_matrix(u)
    if u.shape != (2, 2):
        raise DimensionMismatch(f"expected a 2x2 unitary, got {u.shape}")
    if not numerics.is_unitary(u):
        raise NotUnitary("operator is not unitary within 1e-9")
    n = s.num_qubits
    if not 1 <= qubit <= n:
        raise QubitOutOfRange(f"qubit {qubit} outside 1..{n}")
    t = s.amplitudes.reshape((2,) * n)
    t = np.tensordot(u, t, axes=([1], [qubit - 1]))
    t = np.moveaxis(t, 0, qubit - 1)
    amps = t.reshape(-1)
    # Renormalise away the 1e-9 unitarity slack so the result stays a valid state.
    return PureState(n, amps / np.linalg.norm(amps))


def phi5_prime() -> PureState:
    """Hadamard on qubit 5 of the five-qubit AME state."""
    return apply_single_qubit_unitary(phi5(), 5, numerics.H)


def density(s: PureState) -> DensityMatrix:
    v = s.amplitudes
    return DensityMatrix(s.num_qubits, np.outer(v, v.conj()))


CATALOG = {
    "bell": bell,
    "ghz3": ghz3,
    "phi5": phi5,
    "phi5_prime": phi5_prime,
    "phi6": ame6,
    "ame5_logical_one": ame5_logical_one,
}


def by_name(name: str) -> PureState:
    try:
        return CATALOG[name]()
    except KeyError:
        raise ValueError(
            f"unknown state {name!r}; choose from {', '.join(sorted(CATALOG))}"
        ) from None
