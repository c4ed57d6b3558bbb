"""
Building k-independent reconfiguration graphs
=============================================

Vertices are the independent sets of size at most k; two sets are joined
when one is the other plus a single vertex.
"""

# %%
from indrecon import build_recon, format_set, path, star

# I_3 of the star K_{1,3}: nine sets, the empty set touches all four vertices
r = build_recon(star(3), 3)
print(r.order, "vertices,", r.size, "edges")
for i, s in enumerate(r.labels.sets):
    print(f"  {i:2d} {format_set(s):10s} ->", [format_set(r.label(j)) for j in r.adj[i]])

# %%
# dropping the empty set splits the graph: the centre has nowhere to go
r_star = build_recon(star(3), 3, include_empty=False)
print(r_star.adj[r_star.index(1)])

# %%
# I_2(P_3) is a 4-cycle with a pendant vertex {1}
r = build_recon(path(3), 2)
print([format_set(s) for s in r.labels.sets], r.edges())
