"""Structural analysis of reconfiguration graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import EmptyGraphInputError
from .recon import ReconGraph

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class ComponentDecomposition:
    count: int
    membership: tuple[int, ...]
    sizes: tuple[int, ...]


def components(r: ReconGraph) -> ComponentDecomposition:
    """Component ids are numbered by their smallest vertex index."""
    comp = [-1] * r.order
    sizes = []
    for root in range(r.order):
        if comp[root] >= 0:
            continue
        cid = len(sizes)
        comp[root] = cid
        stack = [root]
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for w in r.adj[u]:
                if comp[w] < 0:
                    comp[w] = cid
                    stack.append(w)
        sizes.append(size)
    return ComponentDecomposition(len(sizes), tuple(comp), tuple(sizes))


class Bipartition(NamedTuple):
    even: int
    odd: int
    is_valid: bool


def parity_bipartition(r: ReconGraph) -> Bipartition:
    parity = [s.bit_count() & 1 for s in r.labels.sets]
    odd = sum(parity)
    valid = all(parity[i] != parity[j] for i, nb in enumerate(r.adj) for j in nb)
    return Bipartition(r.order - odd, odd, valid)


def girth(r: ReconGraph) -> int | None:
    """Shortest cycle length, or None for a forest.

    One BFS per root with the parent edge excluded. A BFS stops once its
    depth can no longer beat the best cycle seen so far, which keeps the
    common girth-4 case close to linear.
    """
    n = r.order
    adj = r.adj
    best = n + 1
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if best == 3:
            break
        dist[root] = 0
        touched = [root]
        head = 0
        while head < len(touched):
            u = touched[head]
            head += 1
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    touched.append(w)
                elif w != parent[u]:
                    cyc = du + dist[w] + 1
                    if cyc < best:
                        best = cyc
        for v in touched:
            dist[v] = -1
            parent[v] = -1
    return best if best <= n else None


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    is_regular: bool


def degree_profile(r: ReconGraph) -> DegreeProfile:
    if r.order == 0:
        raise EmptyGraphInputError("degree profile of a graph with no vertices")
    degs = [len(nb) for nb in r.adj]
    lo, hi = min(degs), max(degs)
    return DegreeProfile(lo, hi, lo == hi)


class ForestStatus(NamedTuple):
    is_forest: bool
    is_tree: bool


def forest_status(r: ReconGraph) -> ForestStatus:
    count = components(r).count
    forest = r.size == r.order - count
    return ForestStatus(forest, forest and count == 1)


def is_star_shape(r: ReconGraph) -> bool:
    """True iff ``r`` is K_{1,m} for some m >= 0 (a lone vertex counts)."""
    v = r.order
    if v == 0:
        return False
    if v <= 2:
        return r.size == v - 1
    if r.size != v - 1:
        return False
    degs = sorted(len(nb) for nb in r.adj)
    return degs[-1] == v - 1 and degs[-2] == 1


class HamStatus(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class HamMethod(str, enum.Enum):
    PARITY_OBSTRUCTION = "parity_obstruction"
    TOO_FEW_VERTICES = "too_few_vertices"
    EXHAUSTIVE_SEARCH = "exhaustive_search"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class HamiltonicityVerdict:
    status: HamStatus
    method: HamMethod
    witness: tuple[int, ...] | None = None
    expansions: int = 0


def is_hamiltonian_cycle(r: ReconGraph, cycle: tuple[int, ...] | list[int]) -> bool:
    if len(cycle) != r.order + 1 or cycle[0] != cycle[-1]:
        return False
    if sorted(cycle[:-1]) != list(range(r.order)):
        return False
    return all(b in r.adj[a] for a, b in zip(cycle, cycle[1:]))


def hamiltonicity(r: ReconGraph, node_budget: int = DEFAULT_BUDGET) -> HamiltonicityVerdict:
    """Decide Hamiltonicity: size check, parity obstruction, then backtracking.

    The backtracking starts at vertex 0 and tries neighbours by index. It
    rejects at once when some vertex has degree below 2 or the graph is
    disconnected, and abandons a step that would leave an unvisited vertex
    with fewer than two usable neighbours.
    """
    n = r.order
    if n < 3:
        return HamiltonicityVerdict(HamStatus.NO, HamMethod.TOO_FEW_VERTICES)
    even, odd, _ = parity_bipartition(r)
    if even != odd:
        return HamiltonicityVerdict(HamStatus.NO, HamMethod.PARITY_OBSTRUCTION)
    adj = r.adj
    if any(len(nb) < 2 for nb in adj) or components(r).count > 1:
        return HamiltonicityVerdict(HamStatus.NO, HamMethod.EXHAUSTIVE_SEARCH)

    # free[x]: neighbours of x that are not interior path vertices; every
    # vertex off the path needs two of them to be threaded through later
    free = [len(nb) for nb in adj]
    on_path = [False] * n
    on_path[0] = True
    path = [0]
    cursor = [0]
    expansions = 0

    def retreat():
        w = path.pop()
        cursor.pop()
        on_path[w] = False
        u = path[-1] if path else 0
        if path and u != 0:
            for x in adj[u]:
                free[x] += 1

    while path:
        u = path[-1]
        if len(path) == n:
            if adj[u][0] == 0:
                return HamiltonicityVerdict(HamStatus.YES, HamMethod.EXHAUSTIVE_SEARCH, tuple(path) + (0,), expansions)
            retreat()
            continue
        nb = adj[u]
        i = cursor[-1]
        while i < len(nb) and on_path[nb[i]]:
            i += 1
        if i == len(nb):
            retreat()
            continue
        cursor[-1] = i + 1
        w = nb[i]
        if u != 0:
            stranded = False
            for x in nb:
                free[x] -= 1
                if x != w and not on_path[x] and free[x] < 2:
                    stranded = True
            if stranded:
                for x in nb:
                    free[x] += 1
                continue
        if expansions >= node_budget:
            return HamiltonicityVerdict(HamStatus.UNKNOWN, HamMethod.BUDGET_EXHAUSTED, None, expansions)
        expansions += 1
        on_path[w] = True
        path.append(w)
        cursor.append(0)
    return HamiltonicityVerdict(HamStatus.NO, HamMethod.EXHAUSTIVE_SEARCH, None, expansions)
