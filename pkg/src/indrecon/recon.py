"""The k-independent reconfiguration graph and shortest reconfiguration paths."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAVertexError
from .graph import Graph, VertexSet, format_set
from .indsets import DEFAULT_LIMIT, IndSetFamily, enumerate_independent_sets


@dataclass(frozen=True)
class ReconGraph:
    """Vertex ``i`` is the independent set ``labels.sets[i]``; ``adj[i]`` is sorted."""

    labels: IndSetFamily
    adj: tuple[tuple[int, ...], ...]
    k: int
    includes_empty: bool
    base_n: int

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def label(self, i: int) -> VertexSet:
        return self.labels.sets[i]

    def index(self, s: VertexSet) -> int:
        try:
            return self.labels.index_of[s]
        except KeyError:
            raise NotAVertexError(f"{format_set(s)} is not a vertex of this reconfiguration graph") from None

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adj) for j in nb if i < j]

    def degree(self, i: int) -> int:
        return len(self.adj[i])


def build_recon(g: Graph, k: int, include_empty: bool = True, *, limit: int = DEFAULT_LIMIT) -> ReconGraph:
    """I_k(g), or I*_k(g) when ``include_empty`` is false.

    Every edge joins some S to S minus one member, so linking each set to
    its one-smaller subsets produces each edge exactly once.
    """
    fam = enumerate_independent_sets(g, k, include_empty, limit=limit)
    index_of = fam.index_of
    adj: list[list[int]] = [[] for _ in fam.sets]
    for i, s in enumerate(fam.sets):
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            j = index_of.get(s ^ low)
            if j is not None:
                adj[i].append(j)
                adj[j].append(i)
    return ReconGraph(fam, tuple(tuple(sorted(nb)) for nb in adj), k, include_empty, g.n)


@dataclass(frozen=True)
class ReconPath:
    vertices: tuple[VertexSet, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __str__(self) -> str:
        return " ".join(format_set(s) for s in self.vertices)


def bfs_parents(r: ReconGraph, source: int) -> list[int]:
    """Level-synchronous BFS; each vertex's parent is its smallest-index predecessor.

    Unreached vertices get parent -1; the source is its own parent.
    """
    parent = [-1] * r.order
    parent[source] = source
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in r.adj[u]:
                if parent[w] < 0:
                    parent[w] = u
                    nxt.append(w)
        nxt.sort()
        frontier = nxt
    return parent


def recon_distance(r: ReconGraph, s: VertexSet, t: VertexSet) -> ReconPath | None:
    """Shortest token addition/removal sequence from ``s`` to ``t``, or None."""
    si, ti = r.index(s), r.index(t)
    parent = bfs_parents(r, si)
    if parent[ti] < 0:
        return None
    route = [ti]
    while route[-1] != si:
        route.append(parent[route[-1]])
    route.reverse()
    return ReconPath(tuple(r.label(i) for i in route))
