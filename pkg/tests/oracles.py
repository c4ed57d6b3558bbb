"""Brute-force reference implementations used only by the tests.

Nothing here reuses the DFS enumeration, the deletion-based edge builder or
the BFS code of the package.
"""

from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import numpy as np


def adjacency_pairs(g):
    return {(u, v) for u in range(g.n) for v in range(g.n) if g.adj[u] >> v & 1}


def independent_pairwise(g, s):
    verts = [v for v in range(g.n) if s >> v & 1]
    pairs = adjacency_pairs(g)
    return all((a, b) not in pairs for a, b in combinations(verts, 2))


def powerset_independent(g, k=None):
    """Filter all 2^n subsets by the pairwise test."""
    out = set()
    for s in range(1 << g.n):
        if k is not None and bin(s).count("1") > k:
            continue
        if independent_pairwise(g, s):
            out.add(s)
    return out


def poly_by_deletion(g):
    """I(G;x) via I(G) = I(G - v) + x I(G - N[v]), memoised on the vertex mask."""
    adj = g.adj

    @lru_cache(maxsize=None)
    def rec(mask):
        if mask == 0:
            return (1,)
        v = mask.bit_length() - 1
        a = rec(mask & ~(1 << v))
        b = rec(mask & ~(1 << v) & ~adj[v])
        out = list(a) + [0] * max(0, len(b) + 1 - len(a))
        for j, c in enumerate(b):
            out[j + 1] += c
        return tuple(out)

    coeffs = list(rec((1 << g.n) - 1))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def pairwise_recon_edges(labels):
    """All pairs (i, j), i < j, whose labels differ in exactly one element."""
    arr = np.array(labels, dtype=np.int64)
    if arr.size == 0:
        return set()
    x = arr[:, None] ^ arr[None, :]
    single = (x != 0) & ((x & (x - 1)) == 0)
    i, j = np.nonzero(np.triu(single, 1))
    return set(zip(i.tolist(), j.tolist()))


def to_networkx(r):
    h = nx.Graph()
    h.add_nodes_from(range(r.order))
    h.add_edges_from(r.edges())
    return h


def hamiltonian_brute(r):
    """Held-Karp style subset DP; fine up to ~16 vertices."""
    n = r.order
    if n < 3:
        return False
    adj = [set(nb) for nb in r.adj]
    reach = {(1, 0)}
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        for v in range(n):
            if (mask, v) not in reach:
                continue
            for w in adj[v]:
                if not mask >> w & 1:
                    reach.add((mask | 1 << w, w))
    full = (1 << n) - 1
    return any((full, v) in reach and 0 in adj[v] for v in range(1, n))


def hamiltonian_permutations(r):
    n = r.order
    if n < 3:
        return False
    adj = [set(nb) for nb in r.adj]
    for perm in permutations(range(1, n)):
        cyc = (0,) + perm + (0,)
        if all(b in adj[a] for a, b in zip(cyc, cyc[1:])):
            return True
    return False
