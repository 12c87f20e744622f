"""Single-qubit Kraus channels and their identical action on every qubit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import numerics
from .errors import ParamOutOfRange, QubitOutOfRange
from .numerics import I2, X, Y, Z
from .states import DensityMatrix

COMPLETENESS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SingleQubitChannel:
    kraus_ops: tuple
    label: str
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        ops = tuple(numerics.as_matrix(k) for k in self.kraus_ops)
        if not ops or any(k.shape != (2, 2) for k in ops):
            raise ValueError("a channel needs at least one 2x2 Kraus operator")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "kraus_ops", ops)
        object.__setattr__(self, "params", dict(self.params))
        dev = self.completeness_deviation()
        if dev > COMPLETENESS_TOL:
            raise ValueError(f"Kraus operators violate completeness by {dev:.3e}")

    def completeness_deviation(self) -> float:
        s = sum(k.conj().T @ k for k in self.kraus_ops)
        return float(np.max(np.abs(s - I2)))

    def __call__(self, rho) -> np.ndarray:
        """Act on a single-qubit 2x2 matrix."""
        rho = numerics.as_matrix(rho)
        return sum(k @ rho @ k.conj().T for k in self.kraus_ops)


def _check_prob(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParamOutOfRange(f"{name}={value!r} must lie in [0, 1]")
    return value


def _root(x: float) -> float:
    # 1 - 3p/4 etc. can land at -1e-17 for boundary parameters
    return float(np.sqrt(max(x, 0.0)))


def depolarizing(p: float) -> SingleQubitChannel:
    p = _check_prob("p", p)
    a, b = _root(1 - 3 * p / 4), _root(p / 4)
    return SingleQubitChannel((a * I2, b * X, b * Y, b * Z), "depolarizing", {"p": p})


def dephasing_projector(p: float) -> SingleQubitChannel:
    """Dephasing written with the computational-basis projectors."""
    p = _check_prob("p", p)
    p0 = np.diag([1, 0]).astype(complex)
    p1 = np.diag([0, 1]).astype(complex)
    return SingleQubitChannel(
        (_root(1 - p) * I2, _root(p) * p0, _root(p) * p1), "dephasing", {"p": p}
    )


def dephasing_z(p: float) -> SingleQubitChannel:
    """Dephasing written as a probabilistic Z flip with weight ``p/2``."""
    p = _check_prob("p", p)
    return SingleQubitChannel((_root(1 - p / 2) * I2, _root(p / 2) * Z), "dephasing", {"p": p})


def pauli_channel(p: float, q: float, r: float) -> SingleQubitChannel:
    """X, Y, Z errors with probabilities ``p``, ``q``, ``r``."""
    p, q, r = _check_prob("p", p), _check_prob("q", q), _check_prob("r", r)
    if p + q + r > 1.0 + 1e-15:
        raise ParamOutOfRange(f"p+q+r={p + q + r!r} exceeds 1")
    return SingleQubitChannel(
        (_root(1 - p - q - r) * I2, _root(p) * X, _root(q) * Y, _root(r) * Z),
        "pauli",
        {"p": p, "q": q, "r": r},
    )


def identity_channel() -> SingleQubitChannel:
    return SingleQubitChannel((I2,), "identity", {})


def from_config(cfg: Mapping) -> SingleQubitChannel:
    """Build a channel from ``{"type": ..., "p": ..., ["q": ..., "r": ...]}``."""
    kind = cfg.get("type")
    try:
        if kind == "depolarizing":
            return depolarizing(cfg["p"])
        if kind == "dephasing":
            return dephasing_z(cfg["p"])
        if kind == "pauli":
            return pauli_channel(cfg["p"], cfg["q"], cfg["r"])
    except KeyError as exc:
        raise ValueError(f"channel {kind!r} is missing parameter {exc}") from None
    raise ValueError(f"unknown channel type {kind!r}")


def lift(op: np.ndarray, qubit: int, num_qubits: int) -> np.ndarray:
    """Embed a 2x2 operator on ``qubit`` (1-based) into the full register."""
    left = np.eye(2 ** (qubit - 1), dtype=complex)
    right = np.eye(2 ** (num_qubits - qubit), dtype=complex)
    return numerics.kron_all(left, op, right)


def apply_to_qubit(rho: DensityMatrix, ch: SingleQubitChannel, qubit: int) -> DensityMatrix:
    n = rho.num_qubits
    if not 1 <= qubit <= n:
        raise QubitOutOfRange(f"qubit {qubit} outside 1..{n}")
    m = rho.matrix
    out = np.zeros_like(m)
    for k in ch.kraus_ops:
        big = lift(k, qubit, n)
        out += big @ m @ big.conj().T
    # Kraus sums are Hermitian only up to rounding; symmetrise before wrapping.
    return DensityMatrix(n, 0.5 * (out + out.conj().T))


def apply_to_qubit_tensor(rho: DensityMatrix, ch: SingleQubitChannel, qubit: int) -> DensityMatrix:
    """Same map as :func:`apply_to_qubit`, by contracting tensor indices directly."""
    n = rho.num_qubits
    if not 1 <= qubit <= n:
        raise QubitOutOfRange(f"qubit {qubit} outside 1..{n}")
    t = rho.matrix.reshape((2,) * (2 * n))
    row, col = qubit - 1, n + qubit - 1
    out = np.zeros_like(t)
    for k in ch.kraus_ops:
        s = np.moveaxis(np.tensordot(k, t, axes=([1], [row])), 0, row)
        s = np.moveaxis(np.tensordot(k.conj(), s, axes=([1], [col])), 0, col)
        out += s
    m = out.reshape(rho.dim, rho.dim)
    return DensityMatrix(n, 0.5 * (m + m.conj().T))


def apply_symmetric(rho: DensityMatrix, ch: SingleQubitChannel) -> DensityMatrix:
    """Send every qubit through its own copy of ``ch``."""
    for q in range(1, rho.num_qubits + 1):
        rho = apply_to_qubit(rho, ch, q)
    return rho
