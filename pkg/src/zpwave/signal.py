"""Signals on Z_p and the unitary operators acting on them.

A signal is a length-p ``complex128`` numpy array indexed by k = 0..p-1.
Functions accept anything array-like and always return fresh arrays.
"""

from __future__ import annotations

import numpy as np

from .numtheory import PrimeContext, prime_context

__all__ = [
    "as_signal",
    "delta",
    "ones",
    "dft",
    "idft",
    "translate",
    "modulate",
    "dilate",
    "inner_product",
    "norm",
    "default_tolerance",
    "support_size",
]

TOL_FACTOR = 1e-9


def as_signal(x, p: int | None = None) -> np.ndarray:
    """Validate ``x`` as a finite complex vector (of length ``p`` if given)."""
    arr = np.array(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"signal must be one-dimensional, got shape {arr.shape}")
    if p is not None and arr.shape[0] != p:
        raise ValueError(f"signal has length {arr.shape[0]}, expected {p}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("signal contains NaN or Inf")
    return arr


def _context(x: np.ndarray, ctx: PrimeContext | None) -> PrimeContext:
    if ctx is None:
        return prime_context(x.shape[0])
    if ctx.p != x.shape[0]:
        raise ValueError(f"signal has length {x.shape[0]}, context is for p={ctx.p}")
    return ctx


def delta(p: int, k: int = 0) -> np.ndarray:
    """Unit impulse at ``k``."""
    x = np.zeros(p, dtype=np.complex128)
    x[k % p] = 1.0
    return x


def ones(p: int) -> np.ndarray:
    return np.ones(p, dtype=np.complex128)


def dft(x, ctx: PrimeContext | None = None) -> np.ndarray:
    """Unitary DFT, ``xhat(l) = p^(-1/2) sum_k x(k) exp(-2 pi i l k / p)``.

    Direct O(p^2) evaluation against the context's twiddle table; p is prime
    so there is no radix structure to exploit.
    """
    x = as_signal(x)
    ctx = _context(x, ctx)
    return ctx.twiddles @ x


def idft(xhat, ctx: PrimeContext | None = None) -> np.ndarray:
    """Inverse of :func:`dft`."""
    xhat = as_signal(xhat)
    ctx = _context(xhat, ctx)
    return ctx.twiddles.conj() @ xhat


def translate(x, k: int) -> np.ndarray:
    """``T_k x(s) = x(s - k)``."""
    x = as_signal(x)
    p = x.shape[0]
    return x[(np.arange(p) - int(k)) % p]


def modulate(x, ell: int) -> np.ndarray:
    """``M_l x(s) = exp(-2 pi i l s / p) x(s)``."""
    x = as_signal(x)
    p = x.shape[0]
    phase = (int(ell) * np.arange(p)) % p
    return np.exp(-2j * np.pi * phase / p) * x


def dilate(x, m: int, ctx: PrimeContext | None = None) -> np.ndarray:
    """Cyclic dilation ``D_m x(k) = x(m_p k)`` where m_p is the inverse of m mod p."""
    x = as_signal(x)
    ctx = _context(x, ctx)
    p = ctx.p
    if int(m) % p == 0:
        raise ValueError(f"{m} is not invertible modulo {p}")
    mp = ctx.inverses[int(m) % p]
    return x[(mp * np.arange(p)) % p]


def inner_product(x, y) -> complex:
    """``<x, y> = sum x(g) conj(y(g))``, linear in x and conjugate-linear in y."""
    x = as_signal(x)
    y = as_signal(y)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape[0]} vs {y.shape[0]}")
    return complex(np.vdot(y, x))


def norm(x) -> float:
    return float(np.linalg.norm(as_signal(x)))


def default_tolerance(x) -> float:
    """Scale-aware zero threshold ``1e-9 * max(1, max|x|)``."""
    x = as_signal(x)
    peak = float(np.max(np.abs(x))) if x.size else 0.0
    return TOL_FACTOR * max(1.0, peak)


def support_size(x, tol: float | None = None) -> int:
    """Number of entries with modulus above ``tol`` (the numerical ``||x||_0``)."""
    x = as_signal(x)
    if tol is None:
        tol = default_tolerance(x)
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    return int(np.count_nonzero(np.abs(x) > tol))
