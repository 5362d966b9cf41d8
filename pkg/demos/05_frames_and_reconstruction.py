"""Frame verdicts, spectra, tight frames and canonical-dual reconstruction."""
import json

import numpy as np

from zpwave import oracle
from zpwave.frames import (
    build_y_matrix,
    canonical_dual_and_reconstruct,
    frame_report,
    is_frame,
    wavelet_system,
)
from zpwave.numtheory import prime_context, subgroup_of_order
from zpwave.signal import delta, idft, ones

ctx = prime_context(7)
sub = subgroup_of_order(ctx, 3)

# the impulse gives a tight frame with bound M
print(json.dumps(frame_report(delta(7), sub).to_dict(), indent=1))

# a constant window only sees frequency 0
print("ones is a frame?", is_frame(ones(7), sub))

# a window whose spectrum misses the coset H_1 = {3, 6, 5}
y = idft(np.array([1, 1, 0, 0, 0, 0, 0]) / np.sqrt(2))
print("Y matrix |entries|:\n", np.round(np.abs(build_y_matrix(y, sub)), 3))
print("frame?", is_frame(y, sub))

# a generic window: bounds from the spectrum agree with the eigenvalues of S
rng = np.random.default_rng(3)
y = rng.standard_normal(7) + 1j * rng.standard_normal(7)
rep = frame_report(y, sub)
system = wavelet_system(y, sub, ctx)
lo, hi = oracle.hermitian_extremal_eigenvalues(oracle.assemble_frame_operator(system))
print(f"A={rep.lower_bound_A:.6f} B={rep.upper_bound_B:.6f}  oracle: {lo:.6f} {hi:.6f}")

x = rng.standard_normal(7)
rec = canonical_dual_and_reconstruct(x, system)
print("relative reconstruction error:", np.linalg.norm(rec - x) / np.linalg.norm(x))
