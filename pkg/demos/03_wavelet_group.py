"""The affine group W_p = U_p x Z_p and its action on signals."""
import numpy as np

from zpwave.group import act, compose, group_elements, invert
from zpwave.numtheory import prime_context

ctx = prime_context(5)
g, h = (2, 1), (3, 2)
print(f"{g} * {h} = {compose(g, h, ctx)}")
print(f"inverse of {g} = {invert(g, ctx)}")
print("non-commutative:", compose((2, 0), (1, 1), ctx), "vs", compose((1, 1), (2, 0), ctx))

elems = group_elements(ctx)
print("|W_5| =", len(elems))

# translations form a normal subgroup, dilations do not
conj = {compose(compose(g, (1, 1), ctx), invert(g, ctx), ctx) for g in elems}
print("conjugates of (1,1):", sorted(conj))
conj = {compose(compose(g, (2, 0), ctx), invert(g, ctx), ctx) for g in elems}
print("conjugates of (2,0):", sorted(conj))

# the action T_k D_m respects the group law
y = np.random.default_rng(1).standard_normal(5)
err = max(
    np.max(np.abs(act(a, act(b, y, ctx), ctx) - act(compose(a, b, ctx), y, ctx)))
    for a in elems
    for b in elems
)
print("homomorphism error over all pairs:", err)
