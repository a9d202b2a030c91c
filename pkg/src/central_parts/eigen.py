"""Dense symmetric eigensolver (cyclic Jacobi rotations)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MAX_SWEEPS = 500


class NumericError(ArithmeticError):
    """A numerical routine failed to reach its stated accuracy."""


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # column k pairs with eigenvalues[k]
    residual_bound: float

    def residuals(self, m: np.ndarray) -> np.ndarray:
        """Max-norm of ``M x_k - lambda_k x_k`` for every column."""
        r = m @ self.eigenvectors - self.eigenvectors * self.eigenvalues
        return np.abs(r).max(axis=0) if r.size else np.zeros(0)

    def orthonormality_error(self) -> float:
        v = self.eigenvectors
        if not v.size:
            return 0.0
        return float(np.abs(v.T @ v - np.eye(v.shape[1])).max())


def inf_norm(m: np.ndarray) -> float:
    return float(np.abs(m).sum(axis=1).max()) if m.size else 0.0


def eig_sym(m: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Diagonalise a real symmetric matrix.

    Sweeps over all off-diagonal pairs in row order, zeroing each with a
    plane rotation, until the off-diagonal mass is at rounding level.
    Raises :class:`NumericError` if that takes more than ``max_sweeps``
    sweeps or the result misses the residual bound
    ``1e-9 * max(1, ||M||_inf)``.
    """
    a = np.array(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    v = np.eye(n)
    bound = 1e-9 * max(1.0, inf_norm(a))
    scale = float(np.linalg.norm(a)) or 1.0

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= 1e-13 * scale:
            break
        if sweep == max_sweeps:
            raise NumericError(f"Jacobi did not converge in {max_sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-17 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq

    order = np.argsort(np.diag(a), kind="stable")
    values = np.diag(a)[order].copy()
    vectors = v[:, order].copy()
    dec = EigenDecomposition(values, vectors, bound)
    worst = float(dec.residuals(np.asarray(m, dtype=np.float64)).max(initial=0.0))
    if worst > bound:
        raise NumericError(f"eigen-residual {worst:.3e} exceeds bound {bound:.3e}")
    return dec
