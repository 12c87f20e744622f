"""Dense complex matrix helpers.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. The
functions here add the dimension and hermiticity checks that the rest of the
package relies on; the heavy lifting is numpy/LAPACK.
"""
from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotSquare

HERMITIAN_TOL = 1e-9

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = (X + Z) / np.sqrt(2)


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a finite 2-D complex array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise DimensionMismatch(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def _square(m) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    return a


def hermiticity_deviation(m) -> float:
    a = _square(m)
    return float(np.max(np.abs(a - a.conj().T)))


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = _square(m)
    dev = float(np.max(np.abs(a - a.conj().T)))
    if dev > tol:
        raise NotHermitian(f"hermiticity deviation {dev:.3e} exceeds {tol:.1e}")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product, row index ``i_a * b.rows + i_b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*ms) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in ms:
        out = np.kron(out, as_matrix(m))
    return out


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def add(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    return a + b


def scale(c: complex, a) -> np.ndarray:
    return complex(c) * as_matrix(a)


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(_square(a)))


def hermitian_eigh(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.

    The strictly Hermitian part ``(m + m^dagger)/2`` is diagonalised so that
    rounding-level asymmetry does not leak into the result.
    """
    a = check_hermitian(m)
    return np.linalg.eigh(0.5 * (a + a.conj().T))


def hermitian_spectrum(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    Raises
    ------
    NotSquare
        If ``m`` is not square.
    NotHermitian
        If ``max|m - m^dagger|`` exceeds ``1e-9``.
    """
    a = check_hermitian(m)
    return np.linalg.eigvalsh(0.5 * (a + a.conj().T))


def trace_norm_hermitian(m) -> float:
    """Trace norm of a Hermitian matrix, i.e. the sum of absolute eigenvalues."""
    return float(np.sum(np.abs(hermitian_spectrum(m))))


def is_unitary(u, tol: float = 1e-9) -> bool:
    a = _square(u)
    return bool(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))) <= tol)
