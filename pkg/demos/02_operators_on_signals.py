"""Translation, modulation, dilation and the unitary DFT on C^p.

Shows how dilation interacts with the other operators, checked numerically.
"""
import numpy as np

from zpwave.numtheory import prime_context
from zpwave.signal import dft, dilate, inner_product, modulate, translate

ctx = prime_context(11)
p = ctx.p
rng = np.random.default_rng(0)
x = rng.standard_normal(p) + 1j * rng.standard_normal(p)

print("Parseval:  |x| =", np.linalg.norm(x), " |xhat| =", np.linalg.norm(dft(x)))

m, k, ell = 3, 4, 6
mp = ctx.inverses[m]
print(f"m={m} has inverse {mp} mod {p}")

pairs = {
    "D_m T_k = T_mk D_m": (dilate(translate(x, k), m), translate(dilate(x, m), m * k % p)),
    "D_m M_l = M_(m_p l) D_m": (dilate(modulate(x, ell), m), modulate(dilate(x, m), mp * ell % p)),
    "FT(D_m x) = D_(m_p) FT(x)": (dft(dilate(x, m)), dilate(dft(x), mp)),
    "FT(T_k x) = M_k FT(x)": (dft(translate(x, k)), modulate(dft(x), k)),
}
for name, (lhs, rhs) in pairs.items():
    print(f"{name:28s} max error {np.max(np.abs(lhs - rhs)):.1e}")

y = rng.standard_normal(p) + 1j * rng.standard_normal(p)
print("adjoint of D_m is D_(m_p):", abs(inner_product(dilate(x, m), y) - inner_product(x, dilate(y, mp))))
