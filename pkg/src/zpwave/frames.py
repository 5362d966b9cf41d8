"""Wavelet systems over Z_p, their coefficients, energies and frame properties.

For an index set of the form ``M x Z_p`` the frame operator is diagonalised by
the DFT. Frequency 0 has eigenvalue ``p M |yhat(0)|^2``, and every frequency
in the coset ``H_t`` shares the eigenvalue ``p sum_{w in H_t} |yhat(w)|^2``.
Frame bounds, tightness and the canonical dual below are all derived from this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .group import IndexSet, act, enumerate_index_set
from .numtheory import PrimeContext, SubgroupDecomposition, prime_context
from .signal import as_signal, default_tolerance, dft, dilate, support_size

__all__ = [
    "NotAFrameError",
    "InconsistencyError",
    "WaveletSystem",
    "CoefficientGrid",
    "FrameSpectrum",
    "FrameReport",
    "TightVerdict",
    "FullSystemVerdict",
    "wavelet_system",
    "coefficients_direct",
    "coefficients_fourier",
    "energy_coset_formula",
    "energy_analytic_formula",
    "gamma",
    "frame_spectrum",
    "is_frame",
    "is_full_system_frame",
    "build_y_matrix",
    "rows_nonzero",
    "is_tight",
    "frame_operator_apply",
    "canonical_dual",
    "canonical_dual_and_reconstruct",
    "frame_report",
]

TIGHT_RTOL = 1e-8
RECONSTRUCTION_RTOL = 1e-10


class NotAFrameError(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """Two routes to the same quantity disagree; indicates a bug, not bad input."""


def _ctx_for(y: np.ndarray, ctx: PrimeContext | None) -> PrimeContext:
    ctx = prime_context(y.shape[0]) if ctx is None else ctx
    if ctx.p != y.shape[0]:
        raise ValueError(f"signal has length {y.shape[0]}, context is for p={ctx.p}")
    return ctx


def _check_sub(sub: SubgroupDecomposition, ctx: PrimeContext) -> None:
    if sub.p != ctx.p:
        raise ValueError(f"subgroup is for p={sub.p}, context is for p={ctx.p}")


def _nonzero_window(y, tol):
    if support_size(y, tol) == 0:
        raise ValueError("window signal must be non-zero")


@dataclass(frozen=True)
class WaveletSystem:
    """The family ``{T_k D_m y : (m, k) in index_set}``."""

    ctx: PrimeContext
    window: np.ndarray
    index_set: IndexSet

    def __post_init__(self):
        w = as_signal(self.window, self.ctx.p)
        w.setflags(write=False)
        object.__setattr__(self, "window", w)
        if self.index_set.p != self.ctx.p:
            raise ValueError("index set and context disagree on p")

    def __len__(self) -> int:
        return len(self.index_set)

    @cached_property
    def vectors(self) -> np.ndarray:
        """``(len(index_set), p)`` array; row j is ``act(index_set.elements[j], window)``."""
        if not len(self.index_set):
            return np.zeros((0, self.ctx.p), dtype=np.complex128)
        v = np.stack([act(g, self.window, self.ctx) for g in self.index_set])
        v.setflags(write=False)
        return v

    @property
    def subgroup(self) -> SubgroupDecomposition:
        sub = self.index_set.subgroup
        if sub is None:
            raise ValueError("closed-form results need an index set of the form M x Z_p")
        return sub

    @property
    def redundancy(self) -> Fraction:
        return Fraction(len(self.index_set), self.ctx.p)


def wavelet_system(y, sub: SubgroupDecomposition | None = None, ctx=None) -> WaveletSystem:
    """Build ``W(y, M x Z_p)``; ``sub=None`` gives the full system ``W(y)``."""
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    return WaveletSystem(ctx, y, enumerate_index_set(ctx, sub))


@dataclass(frozen=True)
class CoefficientGrid:
    """Coefficients ``<x, sigma(m,k) y>`` listed in index-set order."""

    index_set: IndexSet
    values: np.ndarray

    def energy(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))

    def as_matrix(self) -> np.ndarray:
        """Reshape to ``(M, p)`` rows per dilation; only for ``M x Z_p`` index sets."""
        if self.index_set.subgroup is None:
            raise ValueError("grid is not laid out as M x Z_p")
        return self.values.reshape(self.index_set.subgroup.order_M, self.index_set.p)

    def __getitem__(self, g) -> complex:
        return complex(self.values[self._position[tuple(g)]])

    @cached_property
    def _position(self) -> dict:
        return {tuple(g): j for j, g in enumerate(self.index_set)}


def _check_pair(x, system: WaveletSystem) -> np.ndarray:
    x = as_signal(x)
    if x.shape[0] != system.ctx.p:
        raise ValueError(f"length mismatch: signal {x.shape[0]} vs system p={system.ctx.p}")
    return x


def coefficients_direct(x, system: WaveletSystem) -> CoefficientGrid:
    """Analysis operator by definition: one inner product per system vector."""
    x = _check_pair(x, system)
    return CoefficientGrid(system.index_set, system.vectors.conj() @ x)


def coefficients_fourier(x, system: WaveletSystem) -> CoefficientGrid:
    """Coefficients one dilation at a time through the DFT.

    For fixed m, ``<x, T_k D_m y> = sqrt(p) * F(xhat * conj(D_{m_p} yhat))(p - k)``
    gives all p translates with a single transform.
    """
    x = _check_pair(x, system)
    ctx = system.ctx
    p = ctx.p
    xhat = dft(x, ctx)
    yhat = dft(system.window, ctx)
    rows = {}
    values = np.empty(len(system.index_set), dtype=np.complex128)
    neg = (-np.arange(p)) % p
    for j, (m, k) in enumerate(system.index_set):
        if m not in rows:
            dm_yhat = dilate(yhat, ctx.inverses[m], ctx)
            rows[m] = np.sqrt(p) * dft(xhat * dm_yhat.conj(), ctx)[neg]
        values[j] = rows[m][k]
    return CoefficientGrid(system.index_set, values)


def _power(x, ctx):
    return np.abs(dft(x, ctx)) ** 2


def energy_coset_formula(x, y, sub: SubgroupDecomposition, ctx=None) -> float:
    """``sum_{m in M} sum_k |<x, T_k D_m y>|^2`` from coset sums of the two spectra."""
    x, y = as_signal(x), as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    px, py = _power(x, ctx), _power(y, ctx)
    total = sub.order_M * px[0] * py[0]
    for h in sub.cosets:
        idx = list(h)
        total += px[idx].sum() * py[idx].sum()
    return float(ctx.p * total)


def gamma(y, sub: SubgroupDecomposition, ell: int, ctx=None) -> float:
    """``sum_{m in M} |yhat(m l)|^2`` for l in U_p outside M."""
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    ell = int(ell) % ctx.p
    if ell == 0 or ell in sub:
        raise ValueError(f"gamma is defined for l in U_p - M, got l={ell}")
    py = _power(y, ctx)
    return float(sum(py[m * ell % ctx.p] for m in sub.elements))


def energy_analytic_formula(x, y, sub: SubgroupDecomposition, ctx=None) -> float:
    """The same energy written with ``gamma_l`` for each frequency outside M."""
    x, y = as_signal(x), as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    p = ctx.p
    px, py = _power(x, ctx), _power(y, ctx)
    members = list(sub.elements)
    total = sub.order_M * py[0] * px[0] + py[members].sum() * px[members].sum()
    for ell in range(1, p):
        if ell in sub:
            continue
        g = sum(py[m * ell % p] for m in members)
        total += g * px[ell]
    return float(p * total)


@dataclass(frozen=True)
class FrameSpectrum:
    """Frame-operator eigenvalues of ``W(y, M x Z_p)``: one for frequency 0, one per coset."""

    dc: float
    cosets: tuple[float, ...]
    subgroup: SubgroupDecomposition = field(repr=False)

    @property
    def values(self) -> np.ndarray:
        return np.array((self.dc,) + self.cosets)

    @property
    def min(self) -> float:
        return float(self.values.min())

    @property
    def max(self) -> float:
        return float(self.values.max())

    @property
    def theta(self) -> float:
        """Smallest coset energy of the window spectrum, ``min_t sum_{H_t} |yhat|^2``."""
        return min(self.cosets) / self.subgroup.p

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalue attached to each frequency 0..p-1."""
        lam = np.empty(self.subgroup.p)
        lam[0] = self.dc
        lam[1:] = np.asarray(self.cosets)[self.subgroup.coset_labels[1:]]
        return lam


def frame_spectrum(y, sub: SubgroupDecomposition, ctx=None) -> FrameSpectrum:
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    p = ctx.p
    py = _power(y, ctx)
    dc = p * sub.order_M * py[0]
    cosets = tuple(float(p * py[list(h)].sum()) for h in sub.cosets)
    return FrameSpectrum(float(dc), cosets, sub)


def build_y_matrix(y, sub: SubgroupDecomposition, ctx=None) -> np.ndarray:
    """The ``a x M`` matrix with entry ``(t, j) = yhat(eps^(j a + t))``.

    Row t lists yhat on the coset H_t in generator-power order.
    """
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    yhat = dft(y, ctx)
    return yhat[np.array(sub.cosets, dtype=int)]


def rows_nonzero(matrix: np.ndarray, tol: float) -> list[bool]:
    return [bool(np.any(np.abs(row) > tol)) for row in matrix]


def _spectral_tol(y, tol):
    return default_tolerance(dft(y)) if tol is None else tol


def is_frame(y, sub: SubgroupDecomposition, ctx=None, tol: float | None = None) -> bool:
    """Whether ``W(y, M x Z_p)`` spans C^p.

    True iff ``yhat(0)`` is non-zero and every coset H_t carries a non-zero
    ``yhat`` value; "non-zero" means modulus above ``tol``.
    """
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    tol = _spectral_tol(y, tol)
    _nonzero_window(y, tol)
    yhat = dft(y, ctx)
    if abs(yhat[0]) <= tol:
        return False
    return all(np.any(np.abs(yhat[list(h)]) > tol) for h in sub.cosets)


@dataclass(frozen=True)
class FullSystemVerdict:
    is_frame: bool
    redundancy: int

    def __bool__(self) -> bool:
        return self.is_frame


def is_full_system_frame(y, ctx=None, tol: float | None = None) -> FullSystemVerdict:
    """Full system ``W(y)``: a frame iff ``yhat(0) != 0`` and ``||yhat||_0 >= 2``."""
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    tol = _spectral_tol(y, tol)
    _nonzero_window(y, tol)
    yhat = dft(y, ctx)
    ok = abs(yhat[0]) > tol and support_size(yhat, tol) >= 2
    return FullSystemVerdict(bool(ok), ctx.p - 1)


@dataclass(frozen=True)
class TightVerdict:
    is_tight: bool
    alpha: float | None

    def __bool__(self) -> bool:
        return self.is_tight


def _close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def is_tight(
    y, sub: SubgroupDecomposition, ctx=None, tol: float | None = None, rtol: float = TIGHT_RTOL
) -> TightVerdict:
    """Tightness of ``W(y, M x Z_p)`` and its bound ``alpha = p M |yhat(0)|^2``.

    Checked two ways: ``M |sum_k y(k)|^2 == p sum_{H_t} |yhat|^2`` for every t,
    and flatness of the spectrum. Disagreement raises :class:`InconsistencyError`.
    """
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    tol = _spectral_tol(y, tol)
    _nonzero_window(y, tol)
    p = ctx.p
    yhat = dft(y, ctx)
    py = np.abs(yhat) ** 2
    dc_ok = abs(yhat[0]) > tol

    lhs = sub.order_M * abs(y.sum()) ** 2
    by_condition = dc_ok and all(_close(lhs, p * py[list(h)].sum(), rtol) for h in sub.cosets)

    spec = frame_spectrum(y, sub, ctx)
    by_flatness = dc_ok and (spec.max - spec.min) < rtol * spec.max
    if by_condition != by_flatness:
        raise InconsistencyError(
            f"tightness tests disagree (condition={by_condition}, flatness={by_flatness})"
        )
    if not by_condition:
        return TightVerdict(False, None)
    return TightVerdict(True, float(p * sub.order_M * py[0]))


def frame_operator_apply(x, system: WaveletSystem) -> np.ndarray:
    """``S x = sum_j <x, v_j> v_j``."""
    x = _check_pair(x, system)
    v = system.vectors
    return v.T @ (v.conj() @ x)


def canonical_dual(system: WaveletSystem, tol: float | None = None) -> np.ndarray:
    """Rows ``S^-1 v_j``, with S inverted frequency by frequency."""
    ctx = system.ctx
    lam = frame_spectrum(system.window, system.subgroup, ctx).eigenvalues()
    if tol is None:
        tol = default_tolerance(lam)
    if np.any(lam <= tol):
        raise NotAFrameError(f"frame operator is singular (smallest eigenvalue {lam.min():.3e})")
    v = system.vectors
    vhat = v @ ctx.twiddles.T
    return (vhat / lam) @ ctx.twiddles.conj().T


def canonical_dual_and_reconstruct(
    x, system: WaveletSystem, tol: float | None = None, rtol: float = RECONSTRUCTION_RTOL
) -> np.ndarray:
    """Reconstruct ``x = sum_j <x, S^-1 v_j> v_j`` and verify the residual."""
    x = _check_pair(x, system)
    dual = canonical_dual(system, tol)
    coeffs = dual.conj() @ x
    rec = system.vectors.T @ coeffs
    err = np.linalg.norm(rec - x)
    if err > rtol * np.linalg.norm(x):
        raise InconsistencyError(f"reconstruction residual {err:.3e} exceeds {rtol:g} relative")
    return rec


@dataclass(frozen=True)
class FrameReport:
    p: int
    M: int
    a: int
    is_frame: bool
    is_tight: bool
    lower_bound_A: float
    upper_bound_B: float
    paper_lower_bound: float
    alpha_tight: float | None
    redundancy: Fraction
    spectrum: FrameSpectrum
    y_matrix_row_nonzero: tuple[bool, ...]
    dc_nonzero: bool
    tolerance: float

    def to_dict(self) -> dict:
        red = self.redundancy
        return {
            "p": self.p,
            "M": self.M,
            "a": self.a,
            "is_frame": self.is_frame,
            "is_tight": self.is_tight,
            "A": self.lower_bound_A,
            "B": self.upper_bound_B,
            "paper_lower_bound": self.paper_lower_bound,
            "alpha": self.alpha_tight,
            "redundancy": red.numerator if red.denominator == 1 else float(red),
            "spectrum": {"dc": self.spectrum.dc, "cosets": list(self.spectrum.cosets)},
            "y_matrix_rows_nonzero": list(self.y_matrix_row_nonzero),
            "tolerance": self.tolerance,
        }


def frame_report(y, sub: SubgroupDecomposition, ctx=None, tol: float | None = None) -> FrameReport:
    """Collect verdicts, spectrum, bounds and row diagnostics for ``W(y, M x Z_p)``."""
    y = as_signal(y)
    ctx = _ctx_for(y, ctx)
    _check_sub(sub, ctx)
    tol = _spectral_tol(y, tol)
    frame = is_frame(y, sub, ctx, tol)
    yhat = dft(y, ctx)
    rows = tuple(rows_nonzero(build_y_matrix(y, sub, ctx), tol))
    dc_nonzero = bool(abs(yhat[0]) > tol)
    if frame != (dc_nonzero and all(rows)):
        raise InconsistencyError("matrix criterion disagrees with the coset criterion")
    tight = is_tight(y, sub, ctx, tol)
    spec = frame_spectrum(y, sub, ctx)
    paper_A = min(sub.order_M * abs(y.sum()) ** 2, ctx.p * spec.theta)
    return FrameReport(
        p=ctx.p,
        M=sub.order_M,
        a=sub.index_a,
        is_frame=frame,
        is_tight=tight.is_tight,
        lower_bound_A=spec.min,
        upper_bound_B=spec.max,
        paper_lower_bound=float(paper_A),
        alpha_tight=tight.alpha,
        redundancy=Fraction(sub.order_M * ctx.p, ctx.p),
        spectrum=spec,
        y_matrix_row_nonzero=rows,
        dc_nonzero=dc_nonzero,
        tolerance=float(tol),
    )
