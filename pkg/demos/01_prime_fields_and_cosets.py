"""Z_p arithmetic: inverses, a primitive root, and the coset partition of U_p.

Run with ``python demos/01_prime_fields_and_cosets.py``.
"""
from zpwave.numtheory import divisors, element_order, mod_inverse, prime_context, subgroup_of_order

ctx = prime_context(13)
print("p =", ctx.p, " primitive root =", ctx.primitive_root)
print("prime factors of p-1:", ctx.factors_of_p_minus_1)

# every unit has an inverse; the orders divide p-1
for m in range(1, ctx.p):
    print(f"  m={m:2d}  inverse={mod_inverse(m, ctx):2d}  order={element_order(m, ctx)}")

# one subgroup per divisor M of p-1; its cosets eps^t * M split U_p into a pieces
for M in divisors(ctx.p - 1):
    sub = subgroup_of_order(ctx, M)
    print(f"M={M:2d} a={sub.index_a:2d} subgroup={sub.sorted_elements}")
    for t, h in enumerate(sub.cosets):
        print(f"     H_{t} = {list(h)}")
