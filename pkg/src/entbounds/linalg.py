"""Dense complex linear algebra for small multi-qubit systems.

Matrices are plain ``numpy.ndarray`` objects with complex entries, row-major,
with the first tensor factor most significant (``kron(A, B)`` convention).
Systems are capped at 6 qubits (dimension 64), which keeps every operation
here effectively instantaneous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Global numeric tolerances, sized for <=64-dimensional spectra.
TAU_NUM = 1e-9    # generic numeric comparisons (norms, traces)
TAU_HERM = 1e-9   # max-entry Hermiticity deviation accepted
TAU_PSD = 1e-9    # most negative eigenvalue accepted as round-off

MAX_DIM = 64      # 6 qubits


class DimensionError(ValueError):
    """Requested object exceeds the configured maximum dimension."""


@dataclass(frozen=True)
class SubsystemShape:
    """Tensor factorization of a Hilbert space: local dimensions plus labels.

    ``dims[0]`` (label ``labels[0]``) is the most significant factor of the
    row-major composite index.
    """

    dims: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.dims) != len(self.labels):
            raise ValueError("dims and labels must have equal length")
        if any(d < 1 for d in self.dims):
            raise ValueError("local dimensions must be positive")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate subsystem labels: {self.labels}")
        if self.dim > MAX_DIM:
            raise DimensionError(
                f"total dimension {self.dim} exceeds maximum {MAX_DIM}")

    @property
    def dim(self) -> int:
        d = 1
        for x in self.dims:
            d *= x
        return d

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def positions(self, labels: Iterable[str]) -> list[int]:
        """Indices of the given labels in shape order; raises on unknown."""
        want = set(labels)
        unknown = want - set(self.labels)
        if unknown:
            raise ValueError(f"unknown subsystem label(s): {sorted(unknown)}")
        return [i for i, lab in enumerate(self.labels) if lab in want]

    def subshape(self, keep: Iterable[str]) -> "SubsystemShape":
        """Shape induced on the kept subsystems, in shape order."""
        pos = self.positions(keep)
        return SubsystemShape(tuple(self.dims[i] for i in pos),
                              tuple(self.labels[i] for i in pos))


def qubit_shape(labels: Sequence[str]) -> SubsystemShape:
    """All-qubit shape with the given labels."""
    return SubsystemShape((2,) * len(labels), tuple(labels))


def default_labels(n_qubits: int) -> tuple[str, ...]:
    """Standard label scheme: A, B for pairs, A,B,C for triples, then
    A, B, C1, ..., C(n-2)."""
    if n_qubits < 1:
        raise ValueError("need at least one qubit")
    if n_qubits <= 2:
        return ("A", "B")[:n_qubits]
    if n_qubits == 3:
        return ("A", "B", "C")
    return ("A", "B") + tuple(f"C{i}" for i in range(1, n_qubits - 1))


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix has non-finite entries")
    return a


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product with the first factor most significant."""
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape[0] * b.shape[0] > MAX_DIM or a.shape[1] * b.shape[1] > MAX_DIM:
        raise DimensionError(
            f"tensor product dimension {a.shape[0] * b.shape[0]}"
            f"x{a.shape[1] * b.shape[1]} exceeds maximum {MAX_DIM}")
    return np.kron(a, b)


def partial_trace(rho, shape: SubsystemShape, keep: Iterable[str]) -> np.ndarray:
    """Reduced matrix on the kept subsystems (induced label order).

    Tracing preserves the total trace; keeping every label returns the input
    unchanged.
    """
    rho = _as_matrix(rho)
    n = shape.n_subsystems
    if rho.shape != (shape.dim, shape.dim):
        raise ValueError(f"matrix shape {rho.shape} does not match "
                         f"subsystem dimension {shape.dim}")
    keep_pos = shape.positions(keep)
    if len(keep_pos) == n:
        return rho.copy()
    kept = set(keep_pos)
    t = rho.reshape(shape.dims + shape.dims)
    in_sub = list(range(n)) + [n + k if k in kept else k for k in range(n)]
    out_sub = [k for k in keep_pos] + [n + k for k in keep_pos]
    red_dim = 1
    for k in keep_pos:
        red_dim *= shape.dims[k]
    return np.einsum(t, in_sub, out_sub).reshape(red_dim, red_dim)


def partial_transpose(rho, shape: SubsystemShape, side: Iterable[str]) -> np.ndarray:
    """Transpose applied on the chosen tensor factors only."""
    rho = _as_matrix(rho)
    n = shape.n_subsystems
    if rho.shape != (shape.dim, shape.dim):
        raise ValueError(f"matrix shape {rho.shape} does not match "
                         f"subsystem dimension {shape.dim}")
    side_pos = shape.positions(side)
    t = rho.reshape(shape.dims + shape.dims)
    perm = list(range(2 * n))
    for k in side_pos:
        perm[k], perm[n + k] = perm[n + k], perm[k]
    return t.transpose(perm).reshape(shape.dim, shape.dim)


def is_hermitian(m, tol: float = TAU_HERM) -> bool:
    m = np.asarray(m)
    return m.shape[0] == m.shape[1] and np.max(np.abs(m - m.conj().T)) <= tol


def hermitian_eigenvalues(h) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, in descending order."""
    h = _as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise ValueError("eigenvalues require a square matrix")
    dev = np.max(np.abs(h - h.conj().T))
    if dev > TAU_HERM:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return np.linalg.eigvalsh(h)[::-1].copy()


def psd_sqrt(m) -> np.ndarray:
    """Hermitian PSD square root S with S @ S == m.

    Eigenvalues in [-TAU_PSD, 0) are treated as round-off and clipped to
    zero; anything more negative is rejected.
    """
    m = _as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("psd_sqrt requires a square matrix")
    dev = np.max(np.abs(m - m.conj().T))
    if dev > TAU_HERM:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    w, v = np.linalg.eigh(m)
    if w[0] < -TAU_PSD:
        raise ValueError(f"matrix is not PSD (eigenvalue {w[0]:.3e})")
    w = np.where(w < 0.0, 0.0, w)
    s = (v * np.sqrt(w)) @ v.conj().T
    return (s + s.conj().T) / 2


def trace_norm(m) -> float:
    """Sum of singular values; for Hermitian input, sum of |eigenvalues|."""
    m = _as_matrix(m)
    if m.shape[0] == m.shape[1] and is_hermitian(m):
        return float(np.abs(np.linalg.eigvalsh(m)).sum())
    return float(np.linalg.svd(m, compute_uv=False).sum())


def projector(amplitudes) -> np.ndarray:
    """Rank-one projector |psi><psi| from an amplitude vector."""
    v = np.asarray(amplitudes, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())
