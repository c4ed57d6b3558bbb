"""Base graphs as per-vertex neighbour bit masks.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member. Graphs are limited to 63 vertices so every set fits in one word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    SizeConstraintError,
    VertexOutOfRangeError,
)

MAX_ORDER = 63

VertexSet = int

FAMILY_KINDS = ("path", "cycle", "star", "wheel", "complete", "empty", "multipartite")


# ---------------------------------------------------------------------------
# vertex-set helpers
# ---------------------------------------------------------------------------

def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        if v < 0:
            raise VertexOutOfRangeError(f"negative vertex {v}")
        s |= 1 << v
    return s


def members(s: VertexSet) -> Iterator[int]:
    """Yield the vertices of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def format_set(s: VertexSet) -> str:
    return "{" + ",".join(str(v) for v in members(s)) + "}"


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """Which named family a generated graph belongs to.

    ``size`` is the family parameter (``n`` for most kinds, the number of
    leaves for stars); ``parts`` is only used by complete multipartite graphs.
    """

    kind: str
    size: int = 0
    parts: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "multipartite":
            return "K_{" + ",".join(map(str, self.parts)) + "}"
        symbol = {
            "path": "P_{}",
            "cycle": "C_{}",
            "star": "K_{{1,{}}}",
            "wheel": "W_{}",
            "complete": "K_{}",
            "empty": "E_{}",
        }[self.kind]
        return symbol.format(self.size)

    def multipartite_parts(self) -> tuple[int, ...] | None:
        """Part sizes when this family is a complete multipartite graph."""
        if self.kind == "multipartite":
            return self.parts
        if self.kind == "complete":
            return (1,) * self.size
        if self.kind == "empty":
            return (self.size,)
        if self.kind == "star":
            return (1, self.size)
        return None


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour mask of ``v``. ``family`` records the
    generator that produced the graph, if any; it does not take part in
    equality.
    """

    n: int
    adj: tuple[int, ...]
    family: Family | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise SizeConstraintError(f"graph order must be in [0, {MAX_ORDER}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise VertexOutOfRangeError(f"neighbour of {v} outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise SelfLoopError(f"self-loop at {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], family: Family | None = None) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise SizeConstraintError(f"graph order must be in [0, {MAX_ORDER}], got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), family)

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_complete(self) -> bool:
        return all(nb.bit_count() == self.n - 1 for nb in self.adj)

    def is_edgeless(self) -> bool:
        return not any(self.adj)

    def dominating_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v].bit_count() == self.n - 1]

    def __repr__(self) -> str:
        name = f" {self.family}" if self.family else ""
        return f"Graph(n={self.n}, m={self.m}{name})"


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SizeConstraintError(message)


def path(n: int) -> Graph:
    _require(1 <= n <= MAX_ORDER, f"path needs 1 <= n <= {MAX_ORDER}, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), Family("path", n))


def cycle(n: int) -> Graph:
    _require(3 <= n <= MAX_ORDER, f"cycle needs 3 <= n <= {MAX_ORDER}, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    return Graph.from_edges(n, edges, Family("cycle", n))


def star(n_leaves: int) -> Graph:
    """K_{1,n_leaves}: centre 0, leaves ``1..n_leaves``."""
    _require(1 <= n_leaves <= MAX_ORDER - 1, f"star needs 1 <= n_leaves <= {MAX_ORDER - 1}, got {n_leaves}")
    return Graph.from_edges(n_leaves + 1, ((0, i) for i in range(1, n_leaves + 1)), Family("star", n_leaves))


def wheel(n: int) -> Graph:
    """W_n on ``n`` vertices in total: hub 0 joined to a cycle on ``1..n-1``."""
    _require(4 <= n <= MAX_ORDER, f"wheel needs 4 <= n <= {MAX_ORDER}, got {n}")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, edges, Family("wheel", n))


def complete(n: int) -> Graph:
    _require(1 <= n <= MAX_ORDER, f"complete graph needs 1 <= n <= {MAX_ORDER}, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)), Family("complete", n))


def empty_graph(n: int) -> Graph:
    _require(1 <= n <= MAX_ORDER, f"empty graph needs 1 <= n <= {MAX_ORDER}, got {n}")
    return Graph(n, (0,) * n, Family("empty", n))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = tuple(parts)
    _require(len(parts) >= 1, "complete multipartite graph needs at least one part")
    _require(all(p >= 1 for p in parts), f"every part must be >= 1, got {list(parts)}")
    n = sum(parts)
    _require(n <= MAX_ORDER, f"total order must be <= {MAX_ORDER}, got {n}")
    full = (1 << n) - 1
    adj = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        adj.extend([full & ~block] * p)
        start += p
    return Graph(n, tuple(adj), Family("multipartite", n, parts))


def make_family(kind: str, n: int | None = None, parts: Sequence[int] | None = None) -> Graph:
    """Build a named family graph; ``n`` is the leaf count for ``"star"``."""
    if kind == "multipartite":
        if parts is None:
            raise SizeConstraintError("multipartite needs part sizes")
        return complete_multipartite(parts)
    builders = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "wheel": wheel,
        "complete": complete,
        "empty": empty_graph,
    }
    if kind not in builders:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
    if n is None:
        raise SizeConstraintError(f"{kind} needs a size")
    return builders[kind](n)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def is_independent(g: Graph, s: VertexSet) -> bool:
    if s < 0 or s >> g.n:
        raise VertexOutOfRangeError(f"set {s:#x} has members outside 0..{g.n - 1}")
    rest = s
    while rest:
        low = rest & -rest
        if g.adj[low.bit_length() - 1] & s:
            return False
        rest ^= low
    return True


# ---------------------------------------------------------------------------
# structural recognition (used when a graph carries no family metadata)
# ---------------------------------------------------------------------------

def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full


def multipartite_parts(g: Graph) -> tuple[int, ...] | None:
    """Part sizes if ``g`` is complete multipartite, else ``None``.

    Parts are the classes of "non-adjacent or equal", which must be an
    equivalence relation; sizes are listed by smallest member.
    """
    if g.n == 0:
        return None
    parts = []
    assigned = 0
    for v in range(g.n):
        if assigned >> v & 1:
            continue
        block = g.full & ~g.adj[v]
        for u in members(block):
            if (g.full & ~g.adj[u]) != block:
                return None
        assigned |= block
        parts.append(block.bit_count())
    return tuple(parts)


def recognize(g: Graph) -> list[Family]:
    """Every named family ``g`` is literally equal to (same labelling)."""
    found = []
    n = g.n
    if n == 0:
        return found
    for kind, lo in (("path", 1), ("cycle", 3), ("wheel", 4), ("complete", 1), ("empty", 1)):
        if n >= lo and make_family(kind, n) == g:
            found.append(Family(kind, n))
    if n >= 2 and star(n - 1) == g:
        found.append(Family("star", n - 1))
    parts = multipartite_parts(g)
    if parts is not None:
        found.append(Family("multipartite", n, parts))
    return found


def families_of(g: Graph) -> list[Family]:
    """Family metadata when present, otherwise structural recognition."""
    if g.family is not None:
        return [g.family]
    return recognize(g)


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    lines = [
        (i, line.split())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedHeaderError("missing 'n m' header", 0)
    hline, header = lines[0]
    if len(header) != 2 or not all(t.isdigit() for t in header):
        raise MalformedHeaderError(f"expected 'n m', got {' '.join(header)!r}", hline)
    n, m = int(header[0]), int(header[1])
    if n > MAX_ORDER:
        raise SizeConstraintError(f"line {hline}: graph order must be <= {MAX_ORDER}, got {n}")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else hline)
        raise MalformedHeaderError(f"header declares {m} edges but {len(body)} edge lines follow", where)
    adj = [0] * n
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise MalformedHeaderError(f"expected 'u v', got {' '.join(tokens)!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedHeaderError(f"non-integer vertex in {' '.join(tokens)!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def format_edge_list(g: Graph) -> str:
    out = []
    if g.family is not None:
        out.append(f"# {g.family}")
    edges = g.edges()
    out.append(f"{g.n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"
