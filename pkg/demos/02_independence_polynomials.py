"""
Independence polynomials and alternating numbers
================================================

I(G; 1) counts all independent sets and so the vertices of I_alpha(G);
I(G; -1) is the even-minus-odd imbalance of the parity bipartition.
"""

# %%
from indrecon import cycle, eval_at, independence_polynomial, parity_counts, path, wheel

for name, g in [("P_7", path(7)), ("C_9", cycle(9)), ("W_10", wheel(10))]:
    p = independence_polynomial(g)
    print(f"{name:5s} I(x) = {p}")
    print(f"      I(1) = {eval_at(p, 1)}, I(-1) = {eval_at(p, -1)}, parity = {parity_counts(p)}")

# %%
# the alternating number of paths repeats with period 3 up to sign
print([eval_at(independence_polynomial(path(n)), -1) for n in range(1, 19)])
