"""Claim-by-claim machine checks of the k-independent graph theorems.

Each claim ``C1``..``C16`` is evaluated on one ``(G, k)`` instance. Claims
stated for a fixed bound (``C1`` at k = 1, ``C9``..``C16`` at k = alpha) are
vacuous at other values of ``k``; a bound above alpha counts as alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .analysis import (
    DEFAULT_BUDGET,
    HamStatus,
    components,
    degree_profile,
    forest_status,
    girth,
    hamiltonicity,
    is_star_shape,
    parity_bipartition,
)
from .errors import IndReconError, ResourceLimitError, UnknownClaimError
from .graph import (
    MAX_ORDER,
    Family,
    Graph,
    complete,
    complete_multipartite,
    cycle,
    empty_graph,
    families_of,
    path,
    star,
    wheel,
)
from .indsets import DEFAULT_LIMIT, eval_at, independence_number, independence_polynomial
from .recon import ReconGraph, build_recon

CLAIM_IDS = tuple(f"C{i}" for i in range(1, 17))

CLAIM_TITLES = {
    "C1": "I_1(G) is a star",
    "C2": "I_k(G) is connected",
    "C3": "parity bipartition is valid",
    "C4": "I_k(G) is not regular when G has an edge",
    "C5": "maximum degree of I_k(G) equals |V(G)|",
    "C6": "|V(I_k(G))| >= n + 1",
    "C7": "girth of I_k(G) is 4 when G is not complete",
    "C8": "I_k(G) is not a tree when G is not complete",
    "C9": "|V(I_alpha(G))| = I(G, 1)",
    "C10": "star parts are 2^(n-1) and 2^(n-1) + 1",
    "C11": "I_n(K_{1,n}) is not Hamiltonian",
    "C12": "min degree of I_alpha(P_n) is floor(n/2)",
    "C13": "alternating number of paths, cycles and wheels",
    "C14": "I_alpha of P_{3n-1}, P_{3n}, C_n, W_n is not Hamiltonian",
    "C15": "a dominating vertex disconnects I*_alpha(G)",
    "C16": "I*_alpha(K_{n_1..n_m}) has m components",
}


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    instance: str
    applicable: bool
    holds: bool | None
    details: str
    graph: Graph = field(repr=False)
    k: int = 0
    error: str | None = None

    @property
    def status(self) -> str:
        """One of ``pass``, ``fail``, ``vacuous``, ``untested``, ``error``."""
        if self.error is not None:
            return "error"
        if not self.applicable:
            return "vacuous"
        if self.holds is None:
            return "untested"
        return "pass" if self.holds else "fail"


def describe_instance(g: Graph, k: int) -> str:
    name = f"{g.family} " if g.family is not None else ""
    edges = ",".join(f"{u}-{v}" for u, v in g.edges())
    return f"{name}n={g.n} edges=[{edges}] k={k}"


def alternating_number_formula(kind: str, order: int) -> int:
    """Closed form of I(G; -1) for P_order, C_order and W_order (order = vertex count)."""
    if kind == "path":
        n = (order + 2) // 3
        return 0 if order % 3 == 1 else (-1) ** n
    if kind == "cycle":
        n, r = divmod(order, 3)
        return {0: 2 * (-1) ** n, 1: (-1) ** n, 2: (-1) ** (n + 1)}[r]
    if kind == "wheel":
        n, r = divmod(order, 3)
        return 2 * (-1) ** n - 1 if r == 1 else (-1) ** n - 1
    raise ValueError(kind)


class _Instance:
    """Per-graph cache shared by the claims of one ``check_all`` run."""

    def __init__(self, g: Graph, limit: int, budget: int):
        self.g = g
        self.limit = limit
        self.budget = budget
        self._recon: dict[tuple[int, bool], ReconGraph] = {}
        self._poly = None
        self._alpha = None
        self.families: list[Family] = families_of(g)

    @property
    def alpha(self) -> int:
        if self._alpha is None:
            self._alpha = independence_number(self.g)
        return self._alpha

    @property
    def poly(self):
        if self._poly is None:
            self._poly = independence_polynomial(self.g, limit=self.limit)
        return self._poly

    def recon(self, k: int, include_empty: bool = True) -> ReconGraph:
        k = min(k, self.alpha)
        key = (k, include_empty)
        if key not in self._recon:
            self._recon[key] = build_recon(self.g, k, include_empty, limit=self.limit)
        return self._recon[key]

    def family(self, *kinds: str) -> list[Family]:
        return [f for f in self.families if f.kind in kinds]


Outcome = tuple[bool, "bool | None", str]


def _vacuous(reason: str) -> Outcome:
    return False, None, reason


def _at_alpha(inst: _Instance, k: int) -> Outcome | None:
    if k < inst.alpha:
        return _vacuous(f"claim concerns k = alpha = {inst.alpha}")
    return None


def _c1(inst, k):
    if k != 1:
        return _vacuous("claim concerns k = 1")
    r = inst.recon(1)
    return True, is_star_shape(r), f"order={r.order} size={r.size}"


def _c2(inst, k):
    if k < 1:
        return _vacuous("claim concerns k >= 1")
    comps = components(inst.recon(k))
    return True, comps.count == 1, f"components={comps.count}"


def _c3(inst, k):
    with_empty = parity_bipartition(inst.recon(k, True))
    without = parity_bipartition(inst.recon(k, False))
    ok = with_empty.is_valid and without.is_valid
    return True, ok, f"even={with_empty.even} odd={with_empty.odd}"


def _c4(inst, k):
    if inst.g.is_edgeless():
        return _vacuous("G is edgeless")
    if k < 1:
        return _vacuous("claim concerns k >= 1")
    prof = degree_profile(inst.recon(k))
    return True, not prof.is_regular, f"min_degree={prof.min_degree} max_degree={prof.max_degree}"


def _c5(inst, k):
    if k < 1:
        return _vacuous("claim concerns k >= 1")
    r = inst.recon(k)
    prof = degree_profile(r)
    empty_degree = r.degree(r.index(0))
    n = inst.g.n
    return True, prof.max_degree == n and empty_degree == n, f"expected={n} max_degree={prof.max_degree}"


def _c6(inst, k):
    if k < 1:
        return _vacuous("claim concerns k >= 1")
    r = inst.recon(k)
    return True, r.order >= inst.g.n + 1, f"order={r.order} n={inst.g.n}"


def _c7(inst, k):
    if inst.g.is_complete():
        return _vacuous("G is complete")
    if k < 2:
        return _vacuous("claim concerns k >= 2")
    gr = girth(inst.recon(k))
    return True, gr == 4, f"girth={gr}"


def _c8(inst, k):
    if inst.g.is_complete():
        return _vacuous("G is complete")
    if k < 2:
        return _vacuous("claim concerns k >= 2")
    fs = forest_status(inst.recon(k))
    return True, not fs.is_tree, f"is_forest={fs.is_forest} is_tree={fs.is_tree}"


def _c9(inst, k):
    if (v := _at_alpha(inst, k)) is not None:
        return v
    order = inst.recon(k).order
    expected = eval_at(inst.poly, 1)
    return True, order == expected, f"expected={expected} order={order}"


def _c10(inst, k):
    stars = inst.family("star")
    if not stars:
        return _vacuous("G is not a star")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    leaves = stars[0].size
    bp = parity_bipartition(inst.recon(k))
    expected = (2 ** (leaves - 1), 2 ** (leaves - 1) + 1)
    return True, (bp.even, bp.odd) == expected, f"expected={expected} observed={(bp.even, bp.odd)}"


def _ham_outcome(inst, k) -> Outcome:
    verdict = hamiltonicity(inst.recon(k), inst.budget)
    detail = f"status={verdict.status.value} method={verdict.method.value}"
    if verdict.status is HamStatus.UNKNOWN:
        return True, None, detail
    return True, verdict.status is HamStatus.NO, detail


def _c11(inst, k):
    if not inst.family("star"):
        return _vacuous("G is not a star")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    return _ham_outcome(inst, k)


def _c12(inst, k):
    paths = inst.family("path")
    if not paths:
        return _vacuous("G is not a path")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    n = paths[0].size
    prof = degree_profile(inst.recon(k))
    return True, prof.min_degree == n // 2, f"expected={n // 2} min_degree={prof.min_degree}"


def _c13(inst, k):
    fams = inst.family("path", "cycle", "wheel")
    if not fams:
        return _vacuous("G is not a path, cycle or wheel")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    observed = eval_at(inst.poly, -1)
    ok = True
    parts = []
    for f in fams:
        expected = alternating_number_formula(f.kind, f.size)
        ok = ok and observed == expected
        parts.append(f"{f}: expected={expected}")
    return True, ok, "; ".join(parts) + f" observed={observed}"


def _c14(inst, k):
    fams = [
        f for f in inst.family("path", "cycle", "wheel")
        if f.kind != "path" or f.size % 3 in (0, 2)
    ]
    if not fams:
        return _vacuous("G is not P_{3n-1}, P_{3n}, C_n or W_n")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    return _ham_outcome(inst, k)


def _c15(inst, k):
    g = inst.g
    dominating = g.dominating_vertices()
    if g.n < 2 or not dominating:
        return _vacuous("G has no dominating vertex" if g.n >= 2 else "G has a single vertex")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    r = inst.recon(k, False)
    count = components(r).count
    isolated = all(r.degree(r.index(1 << d)) == 0 for d in dominating)
    return True, count > 1 and isolated, f"components={count} singletons_isolated={isolated}"


def _c16(inst, k):
    parts = None
    for f in inst.families:
        parts = f.multipartite_parts()
        if parts is not None:
            break
    if parts is None:
        return _vacuous("G is not a recognised complete multipartite graph")
    if (v := _at_alpha(inst, k)) is not None:
        return v
    count = components(inst.recon(k, False)).count
    return True, count == len(parts), f"expected={len(parts)} components={count}"


_CLAIMS: dict[str, Callable[[_Instance, int], Outcome]] = {
    "C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4, "C5": _c5, "C6": _c6, "C7": _c7, "C8": _c8,
    "C9": _c9, "C10": _c10, "C11": _c11, "C12": _c12, "C13": _c13, "C14": _c14, "C15": _c15,
    "C16": _c16,
}


def _evaluate(claim_id: str, inst: _Instance, k: int) -> ClaimResult:
    applicable, holds, details = _CLAIMS[claim_id](inst, k)
    return ClaimResult(claim_id, describe_instance(inst.g, k), applicable, holds, details, inst.g, k)


def check_claim(
    claim_id: str, g: Graph, k: int, *, limit: int = DEFAULT_LIMIT, budget: int = DEFAULT_BUDGET
) -> ClaimResult:
    if claim_id not in _CLAIMS:
        raise UnknownClaimError(f"unknown claim {claim_id!r}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _evaluate(claim_id, _Instance(g, limit, budget), k)


def check_all(g: Graph, k: int, *, limit: int = DEFAULT_LIMIT, budget: int = DEFAULT_BUDGET) -> list[ClaimResult]:
    """Evaluate C1..C16 in order; a failing claim never stops the others."""
    inst = _Instance(g, limit, budget)
    results = []
    for cid in CLAIM_IDS:
        try:
            results.append(_evaluate(cid, inst, k))
        except IndReconError as exc:
            results.append(ClaimResult(cid, describe_instance(g, k), True, None, "", g, k, f"{type(exc).__name__}: {exc}"))
    return results


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

class Lcg:
    """64-bit linear congruential generator; each draw is the high 32 bits."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next32(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state >> 32

    def below(self, bound: int) -> int:
        return self.next32() % bound

    def coin(self) -> bool:
        return bool(self.next32() >> 31)


def random_graph(rng: Lcg, n: int) -> Graph:
    """G(n, 1/2): pairs (u, v), u < v, visited in lexicographic order."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.coin()]
    return Graph.from_edges(n, edges)


def random_parts(rng: Lcg, max_parts: int = 5, max_part: int = 5, max_total: int = MAX_ORDER) -> list[int]:
    m = 1 + rng.below(max_parts)
    parts = []
    remaining = max_total
    for _ in range(m):
        if remaining == 0:
            break
        p = min(1 + rng.below(max_part), remaining)
        parts.append(p)
        remaining -= p
    return parts


def with_dominating_vertex(g: Graph) -> Graph:
    """Append vertex ``g.n`` adjacent to every other vertex."""
    return Graph.from_edges(g.n + 1, g.edges() + [(v, g.n) for v in range(g.n)])


def family_instances(max_n: int) -> list[Graph]:
    graphs = []
    for n in range(1, max_n + 1):
        graphs.append(path(n))
        if n >= 3:
            graphs.append(cycle(n))
        if n >= 2:
            graphs.append(star(n - 1))
        if n >= 4:
            graphs.append(wheel(n))
        graphs.append(complete(n))
        graphs.append(empty_graph(n))
    return graphs


def sweep_instances(max_n: int, seed: int, random_count: int) -> list[Graph]:
    """Named families up to ``max_n``, then random multipartite and G(n, 1/2) graphs."""
    if not 1 <= max_n <= MAX_ORDER:
        raise ValueError(f"max_n must be in [1, {MAX_ORDER}], got {max_n}")
    graphs = family_instances(max_n)
    rng = Lcg(seed)
    for _ in range(random_count):
        graphs.append(complete_multipartite(random_parts(rng, max_parts=min(5, max_n), max_total=max_n)))
    for _ in range(random_count):
        graphs.append(random_graph(rng, 1 + rng.below(max_n)))
    return graphs


def _empty_counts() -> dict[str, int]:
    return {"pass": 0, "vacuous": 0, "fail": 0, "error": 0, "untested": 0}


def sweep_families(
    max_n: int,
    seed: int = 0,
    random_count: int = 0,
    *,
    limit: int = DEFAULT_LIMIT,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Run every claim on every instance for each k in 1..alpha and tally outcomes."""
    counts = {cid: _empty_counts() for cid in CLAIM_IDS}
    failures = []
    graphs = sweep_instances(max_n, seed, random_count)
    evaluations = 0
    for g in graphs:
        try:
            independence_polynomial(g, limit=limit)
        except ResourceLimitError as exc:
            alpha = independence_number(g)
            for cid in CLAIM_IDS:
                counts[cid]["error"] += 1
                failures.append({"claim_id": cid, "instance": describe_instance(g, alpha), "status": "error", "details": str(exc)})
            continue
        for k in range(1, independence_number(g) + 1):
            for res in check_all(g, k, limit=limit, budget=budget):
                evaluations += 1
                counts[res.claim_id][res.status] += 1
                if res.status in ("fail", "error"):
                    failures.append({
                        "claim_id": res.claim_id,
                        "instance": res.instance,
                        "status": res.status,
                        "details": res.error or res.details,
                    })
    return {
        "max_n": max_n,
        "seed": seed,
        "random_count": random_count,
        "instances": len(graphs),
        "evaluations": evaluations,
        "claims": counts,
        "failures": failures,
    }
