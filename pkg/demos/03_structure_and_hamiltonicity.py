"""
Components, girth and Hamiltonicity
===================================
"""

# %%
from indrecon import (
    build_recon,
    components,
    cycle,
    degree_profile,
    empty_graph,
    girth,
    hamiltonicity,
    independence_number,
    path,
    wheel,
)

for name, g, k in [("C_4", cycle(4), 2), ("W_5", wheel(5), 2), ("P_5", path(5), 3)]:
    c = components(build_recon(g, k, include_empty=False))
    print(f"I*_{k}({name}): {c.count} component(s), sizes {c.sizes}")

# %%
print("girth of I_2(P_3):", girth(build_recon(path(3), 2)))

# %%
# unequal parity classes rule out a Hamiltonian cycle immediately
for m in range(4, 10):
    g = wheel(m)
    v = hamiltonicity(build_recon(g, independence_number(g)))
    print(f"W_{m}: {v.status.value} via {v.method.value}")

# %%
# the hypercube Q_4 = I_4 of the edgeless graph on 4 vertices has a Gray-code cycle
v = hamiltonicity(build_recon(empty_graph(4), 4))
print(v.status.value, v.witness)

# %%
# minimum degree of I_alpha(P_n) next to floor(n/2)
for n in range(1, 13):
    g = path(n)
    print(n, degree_profile(build_recon(g, independence_number(g))).min_degree, n // 2)
