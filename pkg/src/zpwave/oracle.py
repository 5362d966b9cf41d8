"""Brute-force reference computations for cross-checking :mod:`zpwave.frames`.

Nothing here uses a Fourier transform or the frame module. System vectors are
rebuilt from index arithmetic, ``v(s) = y(m_p (s - k) mod p)``, and everything
else is plain sums, a Jacobi eigenvalue sweep and Gaussian elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DenseHermitian",
    "system_vectors",
    "assemble_frame_operator",
    "hermitian_eigenvalues",
    "hermitian_extremal_eigenvalues",
    "elimination_pivots",
    "span_rank",
    "span_verdict",
    "naive_energy",
]

HERMITIAN_ATOL = 1e-12
JACOBI_RTOL = 1e-12


@dataclass(frozen=True)
class DenseHermitian:
    entries: np.ndarray

    def __post_init__(self):
        h = np.array(self.entries, dtype=np.complex128)
        if h.ndim != 2 or h.shape[0] != h.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {h.shape}")
        if h.size and np.max(np.abs(h - h.conj().T)) > HERMITIAN_ATOL * max(1.0, np.abs(h).max()):
            raise ValueError("matrix is not Hermitian")
        object.__setattr__(self, "entries", h)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]


def _inverse(m: int, p: int) -> int:
    # search, so the oracle shares no code with the Euclidean routine
    for u in range(1, p):
        if m * u % p == 1:
            return u
    raise ValueError(f"{m} is not invertible modulo {p}")


def system_vectors(y, elements) -> np.ndarray:
    """Rows ``T_k D_m y`` for each ``(m, k)``, built entry by entry."""
    y = np.asarray(y, dtype=np.complex128)
    p = y.shape[0]
    rows = []
    for m, k in elements:
        mp = _inverse(m, p)
        rows.append([y[mp * (s - k) % p] for s in range(p)])
    return np.array(rows, dtype=np.complex128).reshape(len(rows), p)


def assemble_frame_operator(system) -> DenseHermitian:
    """``S = sum_j v_j v_j^*`` accumulated term by term."""
    p = system.ctx.p
    s = np.zeros((p, p), dtype=np.complex128)
    for v in system_vectors(system.window, system.index_set.elements):
        s += np.outer(v, v.conj())
    # remove roundoff asymmetry
    return DenseHermitian((s + s.conj().T) / 2)


def hermitian_eigenvalues(h, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi rotations.

    Each rotation first removes the phase of the pivot entry, then applies the
    real symmetric Jacobi rotation. Sweeps stop once the off-diagonal Frobenius
    norm falls below ``1e-12 * ||H||_F``.
    """
    if not isinstance(h, DenseHermitian):
        h = DenseHermitian(h)
    a = h.entries.copy()
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = np.linalg.norm(a)
    target = JACOBI_RTOL * scale

    mask = ~np.eye(n, dtype=bool)

    def off(mat):
        return np.linalg.norm(mat[mask])

    for _ in range(max_sweeps):
        if off(a) <= target:
            return np.sort(np.diag(a).real)
        for i in range(n - 1):
            for j in range(i + 1, n):
                aij = a[i, j]
                mag = abs(aij)
                if mag == 0.0:
                    continue
                phase = aij / mag
                theta = (a[j, j].real - a[i, i].real) / (2.0 * mag)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ph = phase.conjugate()
                # columns: A <- A U
                ci, cj = a[:, i].copy(), a[:, j].copy()
                a[:, i] = c * ci - s * ph * cj
                a[:, j] = s * ci + c * ph * cj
                # rows: A <- U^H A
                ri, rj = a[i, :].copy(), a[j, :].copy()
                a[i, :] = c * ri - s * phase * rj
                a[j, :] = s * ri + c * phase * rj
                a[i, j] = a[j, i] = 0.0
                a[i, i] = a[i, i].real
                a[j, j] = a[j, j].real
    raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def hermitian_extremal_eigenvalues(h) -> tuple[float, float]:
    """``(smallest, largest)`` eigenvalue."""
    ev = hermitian_eigenvalues(h)
    return float(ev[0]), float(ev[-1])


def elimination_pivots(vectors) -> np.ndarray:
    """Pivot magnitudes of Gaussian elimination with complete pivoting.

    Stacks the vectors as rows; at most ``min(len(vectors), p)`` pivots, in
    elimination order (non-increasing in practice).
    """
    a = np.array(vectors, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError("expected a list of equal-length vectors")
    rows, cols = a.shape
    pivots = []
    for step in range(min(rows, cols)):
        sub = np.abs(a[step:, step:])
        r, c = np.unravel_index(np.argmax(sub), sub.shape)
        r += step
        c += step
        a[[step, r]] = a[[r, step]]
        a[:, [step, c]] = a[:, [c, step]]
        piv = a[step, step]
        pivots.append(abs(piv))
        if piv == 0:
            pivots.extend([0.0] * (min(rows, cols) - step - 1))
            break
        factors = a[step + 1 :, step] / piv
        a[step + 1 :, step:] -= np.outer(factors, a[step, step:])
    return np.array(pivots)


def _default_pivot_tol(vectors) -> float:
    return 1e-8 * float(np.max(np.linalg.norm(np.asarray(vectors), axis=1)))


def span_rank(vectors, pivot_tolerance: float | None = None) -> int:
    """Numerical rank: number of pivots above ``pivot_tolerance``.

    The default tolerance is ``1e-8`` times the largest vector norm.
    """
    if pivot_tolerance is None:
        pivot_tolerance = _default_pivot_tol(vectors)
    return int(np.count_nonzero(elimination_pivots(vectors) > pivot_tolerance))


def span_verdict(vectors, pivot_tolerance: float | None = None, margin: float = 10.0) -> str:
    """``"spanning"``, ``"deficient"`` or ``"indeterminate"``.

    Indeterminate when any pivot lies within a factor ``margin`` of the tolerance.
    """
    if pivot_tolerance is None:
        pivot_tolerance = _default_pivot_tol(vectors)
    piv = elimination_pivots(vectors)
    if np.any((piv > pivot_tolerance / margin) & (piv < pivot_tolerance * margin)):
        return "indeterminate"
    p = np.asarray(vectors).shape[1]
    return "spanning" if np.count_nonzero(piv > pivot_tolerance) == p else "deficient"


def naive_energy(x, y, sub, ctx=None) -> float:
    """``sum_{m in M} sum_k |<x, T_k D_m y>|^2`` evaluated term by term."""
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    p = y.shape[0]
    if x.shape != y.shape:
        raise ValueError("length mismatch")
    total = 0.0
    for m in sub.elements:
        mp = _inverse(m, p)
        for k in range(p):
            c = 0j
            for s in range(p):
                c += x[s] * y[mp * (s - k) % p].conjugate()
            total += abs(c) ** 2
    return float(total)
