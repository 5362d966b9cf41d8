"""Wavelet coefficients two ways, and the closed-form energy of the coefficient grid."""
import numpy as np

from zpwave import oracle
from zpwave.frames import (
    coefficients_direct,
    coefficients_fourier,
    energy_analytic_formula,
    energy_coset_formula,
    wavelet_system,
)
from zpwave.numtheory import prime_context, subgroup_of_order

ctx = prime_context(13)
sub = subgroup_of_order(ctx, 4)
rng = np.random.default_rng(2)
x = rng.standard_normal(13) + 1j * rng.standard_normal(13)
y = rng.standard_normal(13) + 1j * rng.standard_normal(13)

system = wavelet_system(y, sub, ctx)
direct = coefficients_direct(x, system)
fast = coefficients_fourier(x, system)
print("grid shape (M, p):", fast.as_matrix().shape)
print("max |direct - fourier|:", np.max(np.abs(direct.values - fast.values)))

print("energy, brute force   :", oracle.naive_energy(x, y, sub))
print("energy, coset formula :", energy_coset_formula(x, y, sub))
print("energy, gamma formula :", energy_analytic_formula(x, y, sub))
