"""Independent-set enumeration and the independence polynomial."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResourceLimitError
from .graph import Graph, VertexSet

DEFAULT_LIMIT = 1 << 22


def _canonical_key(s: VertexSet) -> tuple[int, int]:
    return s.bit_count(), s


@dataclass(frozen=True)
class IndSetFamily:
    """All independent sets of size ``<= k``, ordered by (size, mask)."""

    sets: tuple[VertexSet, ...]
    k: int
    includes_empty: bool
    index_of: dict[VertexSet, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s: VertexSet) -> bool:
        return s in self.index_of


def enumerate_independent_sets(
    g: Graph, k: int, include_empty: bool = True, *, limit: int = DEFAULT_LIMIT
) -> IndSetFamily:
    """Independent sets of ``g`` with at most ``k`` members.

    Depth-first: a set is only extended by vertices above its current maximum
    that are not adjacent to any member, so each set is reached exactly once.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    adj = g.adj
    found: list[VertexSet] = []
    # (set, candidates); candidates are vertices above max(set) not adjacent to it
    stack = [(0, g.full)]
    while stack:
        s, cand = stack.pop()
        found.append(s)
        if len(found) > limit:
            raise ResourceLimitError(f"more than {limit} independent sets of size <= {k}")
        if s.bit_count() == k:
            continue
        while cand:
            low = cand & -cand
            cand ^= low
            stack.append((s | low, cand & ~adj[low.bit_length() - 1]))
    if not include_empty:
        found.remove(0)
    found.sort(key=_canonical_key)
    return IndSetFamily(tuple(found), k, include_empty, {s: i for i, s in enumerate(found)})


def independence_number(g: Graph) -> int:
    best = 0
    adj = g.adj
    stack = [(0, g.full)]
    while stack:
        size, cand = stack.pop()
        # the candidate pool bounds what this branch can still reach
        if size + cand.bit_count() <= best:
            continue
        if size > best:
            best = size
        while cand:
            low = cand & -cand
            cand ^= low
            stack.append((size + 1, cand & ~adj[low.bit_length() - 1]))
    return best


@dataclass(frozen=True)
class IndependencePolynomial:
    """Coefficients ``i_0 .. i_alpha``; ``coeffs[j]`` counts independent sets of size ``j``."""

    coeffs: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return eval_at(self, x)

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}x")
            else:
                terms.append(f"{c}x^{j}")
        return " + ".join(terms)


def independence_polynomial(g: Graph, *, limit: int = DEFAULT_LIMIT) -> IndependencePolynomial:
    """Count independent sets by size with the same pruned DFS, without storing them."""
    adj = g.adj
    counts = [0] * (g.n + 1)
    total = 0
    stack = [(0, g.full)]
    pop, push = stack.pop, stack.append
    while stack:
        size, cand = pop()
        counts[size] += 1
        total += 1
        if total > limit:
            raise ResourceLimitError(f"more than {limit} independent sets")
        size += 1
        while cand:
            low = cand & -cand
            cand ^= low
            push((size, cand & ~adj[low.bit_length() - 1]))
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return IndependencePolynomial(tuple(counts))


def eval_at(p: IndependencePolynomial, x: int) -> int:
    # Horner in exact integers
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def parity_counts(p: IndependencePolynomial) -> tuple[int, int]:
    """(even-size count, odd-size count)."""
    return sum(p.coeffs[0::2]), sum(p.coeffs[1::2])
