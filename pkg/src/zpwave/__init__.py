"""Finite wavelet frames over prime fields Z_p.

Build wavelet systems ``{T_k D_m y}``, compute their coefficients, evaluate
closed-form energies and decide frame / tight-frame status from the window's
Fourier transform.
"""

from .frames import (
    CoefficientGrid,
    FrameReport,
    FrameSpectrum,
    InconsistencyError,
    NotAFrameError,
    WaveletSystem,
    build_y_matrix,
    canonical_dual,
    canonical_dual_and_reconstruct,
    coefficients_direct,
    coefficients_fourier,
    energy_analytic_formula,
    energy_coset_formula,
    frame_operator_apply,
    frame_report,
    frame_spectrum,
    gamma,
    is_frame,
    is_full_system_frame,
    is_tight,
    wavelet_system,
)
from .group import GroupElement, IndexSet, act, compose, enumerate_index_set, invert
from .numtheory import (
    PrimeContext,
    SubgroupDecomposition,
    element_order,
    find_primitive_root,
    mod_inverse,
    prime_context,
    subgroup_of_order,
)
from .signal import (
    delta,
    dft,
    dilate,
    idft,
    inner_product,
    modulate,
    support_size,
    translate,
)

__version__ = "0.1.0"
