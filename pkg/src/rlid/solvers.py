"""Exact decision and optimization: backtracking search, exhaustive
enumeration, and seeded random generators.

The k-decision engine colors vertices in reverse degeneracy order
(dense core first, low-degree vertices late), breaks color symmetry by
allowing at most one brand-new color per step, and prunes as soon as
both closed neighborhoods of a constrained pair are fully colored with
equal color sets.  Search is deterministic: fixed vertex order,
ascending color trials.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .coloring import Coloring
from .graph import (
    BudgetExceeded,
    Graph,
    GraphError,
    bits,
    degeneracy,
    graph_from_edge_mask,
    is_twin_free,
    mask_of,
)

DEFAULT_NODE_BUDGET = 10_000_000

_MODES = ("rlid", "lid", "id", "chromatic")


class Budget:
    """Mutable node-expansion counter with an optional wall-clock cap."""

    __slots__ = ("max_nodes", "nodes", "deadline")

    def __init__(self, max_nodes=None, time_budget_ms=None):
        self.max_nodes = DEFAULT_NODE_BUDGET if max_nodes is None else max_nodes
        self.nodes = 0
        self.deadline = (
            None if time_budget_ms is None else time.monotonic() + time_budget_ms / 1000.0
        )

    def spend(self, amount: int = 1):
        self.nodes += amount
        if self.nodes > self.max_nodes:
            raise BudgetExceeded("node budget %d exceeded" % self.max_nodes, self.nodes)
        if self.deadline is not None and not (self.nodes & 1023):
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time budget exceeded", self.nodes)


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    wall_ms: float


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact computation.

    ``status`` is "exact" or "budget-exceeded"; in the latter case
    value and witness are None rather than a guess.
    """

    parameter: str
    value: int | None
    witness: object
    status: str
    stats: SolveStats


# -- the generic k-coloring decision engine -----------------------------


class _SearchPlan:
    """Per-(graph, mode) precomputation shared across k values."""

    __slots__ = ("g", "mode", "n", "order", "earlier", "checks")

    def __init__(self, g: Graph, mode: str):
        self.g = g
        self.mode = mode
        self.n = g.n
        _, elim = degeneracy(g)
        self.order = tuple(reversed(elim))
        pos = [0] * g.n
        for i, v in enumerate(self.order):
            pos[v] = i

        need_proper = mode in ("proper", "lid")
        earlier = []
        for i, v in enumerate(self.order):
            if need_proper:
                earlier.append(tuple(w for w in bits(g.adj[v]) if pos[w] < i))
            else:
                earlier.append(())
        self.earlier = tuple(earlier)

        if mode == "proper":
            pairs = []
        elif mode == "id":
            pairs = list(itertools.combinations(range(g.n), 2))
        else:
            pairs = [(u, v) for u, v in g.edges() if g.closed[u] != g.closed[v]]
            if mode == "lid":
                bad = [(u, v) for u, v in g.edges() if g.closed[u] == g.closed[v]]
                if bad:
                    raise GraphError(
                        "adjacent twins %r admit no lid coloring" % (bad[0],)
                    )
        checks = [[] for _ in range(max(g.n, 1))]
        for u, v in pairs:
            members = g.closed[u] | g.closed[v]
            last = max(pos[w] for w in bits(members))
            checks[last].append(
                (tuple(bits(g.closed[u])), tuple(bits(g.closed[v])))
            )
        self.checks = tuple(tuple(c) for c in checks)


def _search(plan: _SearchPlan, k: int, budget: Budget):
    """Find a valid assignment with at most k colors, or None."""
    n = plan.n
    if n == 0:
        return []
    col = [0] * n
    order = plan.order
    earlier = plan.earlier
    checks = plan.checks
    spend = budget.spend

    def place(i: int, used: int) -> bool:
        v = order[i]
        enbrs = earlier[i]
        pair_checks = checks[i]
        top = used + 1
        if top > k:
            top = k
        for c in range(1, top + 1):
            spend()
            blocked = False
            for w in enbrs:
                if col[w] == c:
                    blocked = True
                    break
            if blocked:
                continue
            col[v] = c
            good = True
            for lu, lv in pair_checks:
                mu = 0
                for w in lu:
                    mu |= 1 << col[w]
                mv = 0
                for w in lv:
                    mv |= 1 << col[w]
                if mu == mv:
                    good = False
                    break
            if good:
                if i + 1 == n:
                    return True
                if place(i + 1, used if c <= used else used + 1):
                    return True
        col[v] = 0
        return False

    return list(col) if place(0, 0) else None


def _decide(g: Graph, k: int, mode: str, budget) -> Coloring | None:
    if k < 1:
        raise GraphError("color count must be at least 1, got %r" % (k,))
    if budget is None:
        budget = Budget()
    plan = _SearchPlan(g, mode)
    found = _search(plan, k, budget)
    if found is None:
        return None
    return Coloring(found, palette=max(found, default=0))


def decide_k_rlid(g: Graph, k: int, budget=None) -> Coloring | None:
    """Witness coloring with at most k colors, or None when none exists.

    Budget exhaustion raises BudgetExceeded; it never masquerades as
    "no coloring".
    """
    return _decide(g, k, "rlid", budget)


def decide_k_lid(g: Graph, k: int, budget=None) -> Coloring | None:
    """Like decide_k_rlid but proper and with no twin exemption.

    Raises GraphError when the graph has adjacent twins (no lid
    coloring can exist, for any k).
    """
    return _decide(g, k, "lid", budget)


def decide_k_id(g: Graph, k: int, budget=None) -> Coloring | None:
    """Distinct neighborhood color sets over all pairs; twin-free input."""
    if not is_twin_free(g):
        raise GraphError("graph has twins; no id-coloring exists")
    return _decide(g, k, "id", budget)


def decide_k_proper(g: Graph, k: int, budget=None) -> Coloring | None:
    """Ordinary proper k-colorability, same engine and determinism."""
    return _decide(g, k, "proper", budget)


_DECIDERS = {
    "rlid": ("rlid", decide_k_rlid),
    "lid": ("lid", decide_k_lid),
    "id": ("id", decide_k_id),
    "chromatic": ("proper", decide_k_proper),
}


def chi_exact(g: Graph, parameter: str = "rlid", budget=None, *, search_two: bool = False) -> SolveResult:
    """Minimum palette size for the requested parameter.

    Iterative deepening over k.  For rlid the value 2 is impossible
    (one color forces clique components, and the next feasible value
    is 3), so k = 2 is skipped after k = 1 fails; pass
    ``search_two=True`` to search it anyway, e.g. when auditing that
    very law.
    """
    if parameter not in _DECIDERS:
        raise GraphError("unknown parameter %r (expected one of %s)" % (parameter, ", ".join(_DECIDERS)))
    if parameter in ("lid", "id") and not is_twin_free(g):
        raise GraphError("graph has twins; %s-colorings do not exist" % parameter)
    if budget is None:
        budget = Budget()
    start = time.perf_counter()
    if g.n == 0:
        stats = SolveStats(0, 0.0)
        return SolveResult(parameter, 0, Coloring(()), "exact", stats)
    mode = _DECIDERS[parameter][0]
    plan = _SearchPlan(g, mode)
    ks = list(range(1, g.n + 1))
    if parameter == "rlid" and not search_two and g.n >= 2:
        ks.remove(2)
    for k in ks:
        try:
            found = _search(plan, k, budget)
        except BudgetExceeded:
            stats = SolveStats(budget.nodes, (time.perf_counter() - start) * 1000)
            return SolveResult(parameter, None, None, "budget-exceeded", stats)
        if found is not None:
            stats = SolveStats(budget.nodes, (time.perf_counter() - start) * 1000)
            witness = Coloring(found, palette=max(found, default=0))
            return SolveResult(parameter, k, witness, "exact", stats)
    raise AssertionError("deepening ran out at k = n; rainbow fallback should exist")


# -- minimum identifying code -------------------------------------------


def gamma_id_exact(g: Graph, budget=None) -> SolveResult:
    """Minimum identifying code size with a witness vertex set.

    Size search starts at ceil(log2(n+1)); any vertex forming a
    singleton closed-neighborhood symmetric difference with some pair
    is forced into every code.  Candidate sets are tried in
    lexicographic order, so the witness is deterministic.
    """
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.closed[u] == g.closed[v]:
                raise GraphError(
                    "twins (%d, %d) cannot be separated by any code" % (u, v)
                )
    if budget is None:
        budget = Budget()
    start = time.perf_counter()
    n = g.n
    if n == 0:
        return SolveResult("gamma-id", 0, frozenset(), "exact", SolveStats(0, 0.0))
    forced = 0
    for u in range(n):
        for v in range(u + 1, n):
            d = g.closed[u] ^ g.closed[v]
            if d.bit_count() == 1:
                forced |= d
    free = [v for v in range(n) if not (forced >> v & 1)]
    base = forced.bit_count()
    lower = max(n.bit_length(), base)

    def identifying(code_mask: int) -> bool:
        seen = set()
        for v in range(n):
            key = g.closed[v] & code_mask
            if not key or key in seen:
                return False
            seen.add(key)
        return True

    for s in range(lower, n + 1):
        for extra in itertools.combinations(free, s - base):
            try:
                budget.spend()
            except BudgetExceeded:
                stats = SolveStats(budget.nodes, (time.perf_counter() - start) * 1000)
                return SolveResult("gamma-id", None, None, "budget-exceeded", stats)
            code_mask = forced | mask_of(extra)
            if identifying(code_mask):
                stats = SolveStats(budget.nodes, (time.perf_counter() - start) * 1000)
                witness = frozenset(bits(code_mask))
                return SolveResult("gamma-id", s, witness, "exact", stats)
    raise AssertionError("full vertex set identifies any twin-free graph")


# -- exhaustive enumeration ---------------------------------------------


def enumerate_graphs(order: int, filter=None, *, up_to_iso: bool = False):
    """Stream all labeled graphs of the given order, smallest mask first.

    ``filter`` is an optional Graph -> bool predicate applied before
    yielding.  With ``up_to_iso`` only the first representative of each
    isomorphism class (among filtered graphs) is produced; this is a
    convenience for reporting, the full labeled stream is the primary
    contract.  Order is capped at 7.
    """
    if not 0 <= order <= 7:
        raise GraphError("exhaustive enumeration supports order 0..7, got %r" % (order,))
    from .graph import is_isomorphic  # local to keep module import light

    m = order * (order - 1) // 2
    seen_buckets = {}
    for mask in range(1 << m):
        g = graph_from_edge_mask(order, mask)
        if filter is not None and not filter(g):
            continue
        if up_to_iso:
            degs = tuple(sorted(map(int.bit_count, g.adj)))
            nbr_degs = tuple(
                sorted(tuple(sorted(g.degree(w) for w in bits(g.adj[v]))) for v in range(order))
            )
            key = (degs, nbr_degs)
            reps = seen_buckets.setdefault(key, [])
            if any(is_isomorphic(g, r) for r in reps):
                continue
            reps.append(g)
        yield g


# -- seeded random generators -------------------------------------------


def random_split_graph(seed, clique_size: int, stable_size: int, edge_prob, *, twin_free: bool = False):
    """Deterministic random split graph, returned with its partition.

    Clique vertices are 0..clique_size-1, stable vertices follow.
    Each clique-stable pair is wired with probability ``edge_prob``;
    stable vertices left isolated are rewired to one uniform clique
    vertex so the result is connected.  With ``twin_free`` the draw is
    rejected and resampled (same generator stream) until no twins
    remain.
    """
    if clique_size < 1 or stable_size < 1:
        raise GraphError("both sides need at least one vertex")
    if not 0 <= float(edge_prob) <= 1:
        raise GraphError("edge probability %r outside [0, 1]" % (edge_prob,))
    from .families import SplitPartition

    rng = random.Random(seed)
    a, b = clique_size, stable_size
    p = float(edge_prob)
    for _ in range(10000):
        adj = [0] * (a + b)
        for u in range(a):
            for v in range(u + 1, a):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        for s in range(a, a + b):
            for x in range(a):
                if rng.random() < p:
                    adj[s] |= 1 << x
                    adj[x] |= 1 << s
            if not adj[s] and a:
                x = rng.randrange(a)
                adj[s] |= 1 << x
                adj[x] |= 1 << s
        g = Graph.from_adj_masks(a + b, adj)
        if twin_free and not is_twin_free(g):
            continue
        # stable vertices adjacent to the whole clique migrate across so
        # the clique side comes out maximal, which the separator needs
        kset = set(range(a))
        sset = set(range(a, a + b))
        moved = True
        while moved:
            moved = False
            kmask = mask_of(kset)
            for s in sorted(sset):
                if g.adj[s] & kmask == kmask:
                    kset.add(s)
                    sset.remove(s)
                    moved = True
                    break
        part = SplitPartition(frozenset(kset), frozenset(sset))
        return g, part
    raise GraphError(
        "no twin-free draw in 10000 attempts for (%r, %d, %d, %r)"
        % (seed, clique_size, stable_size, edge_prob)
    )
