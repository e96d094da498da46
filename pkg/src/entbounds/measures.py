"""Entanglement quantities: linear entropy, concurrence, concurrence of
assistance, negativity, CREN/CRENoA for qubit pairs, Schmidt rank.

Two-qubit convex roofs use the closed forms built from the spin-flip
spectrum mu_1 >= ... >= mu_4: C = max(0, mu_1 - mu_2 - mu_3 - mu_4) and
C_a = mu_1 + mu_2 + mu_3 + mu_4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    TAU_HERM,
    TAU_NUM,
    TAU_PSD,
    SubsystemShape,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .states import PureState

# sigma_y (x) sigma_y; real in the computational basis.
_SPIN_FLIP = np.kron(np.array([[0.0, -1.0], [1.0, 0.0]]),
                     np.array([[0.0, -1.0], [1.0, 0.0]])) * -1.0

SCHMIDT_TOL = 1e-10

_MEASURE_KINDS = frozenset({"C", "C_a", "N", "N_c", "N_a", "T", "r"})


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint, covering, non-empty label sets of a subsystem shape."""

    left: tuple[str, ...]
    right: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if not self.left or not self.right:
            raise ValueError("both sides of a bipartition must be non-empty")
        if set(self.left) & set(self.right):
            raise ValueError("bipartition sides must be disjoint")

    @classmethod
    def of(cls, shape: SubsystemShape, left) -> "Bipartition":
        """Bipartition of the shape's labels into `left` and the rest."""
        left_pos = shape.positions(left)
        left_set = {shape.labels[i] for i in left_pos}
        right = tuple(l for l in shape.labels if l not in left_set)
        if not right:
            raise ValueError("left side covers every subsystem")
        return cls(tuple(shape.labels[i] for i in left_pos), right)

    @classmethod
    def parse(cls, expression: str, shape: SubsystemShape) -> "Bipartition":
        """Parse an expression like ``AB|C1C2`` against the shape's labels.

        Each side is a concatenation of labels without separators; labels
        are matched greedily, longest first.
        """
        parts = expression.split("|")
        if len(parts) != 2:
            raise ValueError(f"cut {expression!r} must contain exactly one '|'")
        by_len = sorted(shape.labels, key=len, reverse=True)

        def tokenize(side: str) -> list[str]:
            out = []
            rest = side.strip()
            while rest:
                for lab in by_len:
                    if rest.startswith(lab):
                        out.append(lab)
                        rest = rest[len(lab):]
                        break
                else:
                    raise ValueError(
                        f"cannot match {rest!r} in cut {expression!r} "
                        f"against labels {shape.labels}")
            return out

        left, right = tokenize(parts[0]), tokenize(parts[1])
        if set(left) | set(right) != set(shape.labels):
            raise ValueError(f"cut {expression!r} does not cover all labels "
                             f"{shape.labels}")
        bip = cls(tuple(left), tuple(right))
        return bip


@dataclass(frozen=True)
class MeasureValue:
    """A labeled nonnegative measure value."""

    kind: str
    value: float

    def __post_init__(self):
        if self.kind not in _MEASURE_KINDS:
            raise ValueError(f"unknown measure kind {self.kind!r}")
        if self.value < 0:
            raise ValueError("measure values are nonnegative")
        if self.kind == "r" and (self.value < 1 or self.value != int(self.value)):
            raise ValueError("Schmidt rank must be a positive integer")


def _check_density(rho, name: str = "rho") -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"{name} must be a square matrix")
    if np.max(np.abs(rho - rho.conj().T)) > TAU_HERM:
        raise ValueError(f"{name} is not Hermitian")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TAU_NUM:
        raise ValueError(f"{name} has trace {tr!r}, expected 1")
    return rho


def linear_entropy(rho) -> float:
    """1 - Tr(rho^2) of a density matrix; zero iff pure."""
    rho = _check_density(rho)
    return float(1.0 - np.trace(rho @ rho).real)


def reduced_density(psi: PureState, keep) -> np.ndarray:
    """Reduced density matrix of a pure state on the kept labels."""
    return partial_trace(psi.density(), psi.shape, keep)


def pure_concurrence(psi: PureState, cut: Bipartition) -> float:
    """sqrt(2 [1 - Tr rho_left^2]) across the cut; symmetric in the sides."""
    if set(cut.left) | set(cut.right) != set(psi.shape.labels):
        raise ValueError(f"cut {cut.left}|{cut.right} does not cover the "
                         f"state's labels {psi.shape.labels}")
    rho_left = reduced_density(psi, cut.left)
    t = 1.0 - np.trace(rho_left @ rho_left).real
    return float(np.sqrt(2.0 * max(t, 0.0)))


def _mu_spectrum(rho: np.ndarray) -> np.ndarray:
    """Descending spin-flip spectrum mu_i of a two-qubit density matrix.

    The mu_i are the square roots of the eigenvalues of rho @ rho_tilde,
    equivalently the singular values of the symmetric preconcurrence matrix
    tau_ij = v_i^T (sigma_y x sigma_y) v_j over any subnormalized
    decomposition rho = sum_i |v_i><v_i|.  The tau route is used because
    SVD keeps absolute accuracy near zero, where sqrt of an eigenvalue of
    rho @ rho_tilde loses half the digits.  Decomposition vectors with
    weight below 64 eps of the largest are dropped; that removes only
    numerically unresolvable directions.
    """
    w, v = np.linalg.eigh(rho)
    if w[0] < -TAU_PSD:
        raise ValueError(f"density matrix has eigenvalue {w[0]:.3e}")
    cutoff = 64.0 * np.finfo(float).eps * max(w[-1], 0.0)
    w = np.where(w < cutoff, 0.0, w)
    b = v * np.sqrt(w)
    tau = b.T @ _SPIN_FLIP @ b
    return np.linalg.svd(tau, compute_uv=False)


def _check_two_qubit(rho) -> np.ndarray:
    rho = _check_density(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit density matrix, "
                         f"got shape {rho.shape}")
    return rho


def two_qubit_concurrence(rho) -> float:
    """Mixed-state concurrence of a two-qubit density matrix."""
    mu = _mu_spectrum(_check_two_qubit(rho))
    return float(max(0.0, 2.0 * mu[0] - mu.sum()))


def two_qubit_coa(rho) -> float:
    """Concurrence of assistance of a two-qubit density matrix."""
    mu = _mu_spectrum(_check_two_qubit(rho))
    return float(mu.sum())


def cren_crenoa_two_qubit(rho) -> tuple[float, float]:
    """(CREN, CRENoA) of a two-qubit state.

    For qubit pairs the convex-roof extended negativity and its assistance
    version coincide with concurrence and CoA, so the pair is evaluated
    from one spin-flip spectrum.
    """
    mu = _mu_spectrum(_check_two_qubit(rho))
    return float(max(0.0, 2.0 * mu[0] - mu.sum())), float(mu.sum())


def negativity(rho, shape: SubsystemShape, side) -> float:
    """Trace norm of the partial transpose minus one, clipped at zero."""
    rho = _check_density(rho)
    value = trace_norm(partial_transpose(rho, shape, side)) - 1.0
    return max(0.0, float(value))


def schmidt_rank(psi: PureState, cut: Bipartition, tol: float = SCHMIDT_TOL) -> int:
    """Number of Schmidt coefficients across the cut exceeding tol.

    tol applies to the eigenvalues of the reduced state; O(1) spectra at
    these dimensions leave a gap of several decades between genuine zeros
    and round-off, so the default is uncritical.
    """
    rho_left = reduced_density(psi, cut.left)
    ev = np.linalg.eigvalsh(rho_left)
    return int((ev > tol).sum())
