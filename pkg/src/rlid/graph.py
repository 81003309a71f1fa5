"""Core graph machinery: bitmask adjacency, twins, quotients, cliques.

Vertices are dense ints 0..n-1.  Every neighborhood is kept as one int
bitmask, so closed-neighborhood comparisons, unions and symmetric
differences cost a constant number of word operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GraphError(ValueError):
    """Invalid graph construction or a violated operation precondition."""


class BudgetExceeded(RuntimeError):
    """A search ran past its node-expansion or wall-clock budget."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the open-neighborhood bitmask, ``closed[v]`` the closed
    one (``adj[v] | 1 << v``).  ``labels`` optionally carries a role
    string per vertex for generated family instances.
    """

    __slots__ = ("n", "adj", "closed", "labels")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative, got %r" % (n,))
        adj = [0] * n
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError("edge %r is not a pair" % (e,)) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("edge (%r, %r) out of range for order %d" % (u, v, n))
            if u == v:
                raise GraphError("self-loop at vertex %d" % u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self.closed = tuple(a | (1 << v) for v, a in enumerate(adj))
        self.n = n
        self.labels = self._check_labels(n, labels)

    @staticmethod
    def _check_labels(n, labels):
        if labels is None:
            return None
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError("expected %d labels, got %d" % (n, len(labels)))
        return labels

    @classmethod
    def from_adj_masks(cls, n, adj_masks, labels=None):
        """Fast constructor from prevalidated open-neighborhood masks."""
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(adj_masks)
        g.closed = tuple(a | (1 << v) for v, a in enumerate(g.adj))
        g.labels = cls._check_labels(n, labels)
        return g

    # -- basic accessors ------------------------------------------------

    def vertices(self):
        return range(self.n)

    def neighbors(self, v: int):
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in bits(rest):
                out.append((u, u + 1 + off))
        return out

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.edge_count)

    # -- structure ------------------------------------------------------

    def components(self):
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices):
        """Induced subgraph on ``vertices``; old index order is preserved.

        Returns ``(graph, old_of_new)`` where ``old_of_new[i]`` is the
        original index of new vertex ``i``.
        """
        old = sorted(vertices)
        pos = {v: i for i, v in enumerate(old)}
        keep = mask_of(old)
        adj = []
        for v in old:
            m = 0
            for w in bits(self.adj[v] & keep):
                m |= 1 << pos[w]
            adj.append(m)
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in old)
        return Graph.from_adj_masks(len(old), adj, labels), old

    def complement(self):
        full = (1 << self.n) - 1
        adj = [full & ~self.closed[v] for v in range(self.n)]
        return Graph.from_adj_masks(self.n, adj, self.labels)

    def relabeled(self, labels):
        return Graph.from_adj_masks(self.n, self.adj, labels)


def build_graph(order: int, edges, labels=None) -> Graph:
    """Validate and build a graph; duplicate edges collapse silently."""
    return Graph(order, edges, labels)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is selected by ``mask`` over lexicographic pairs.

    Bit i of ``mask`` toggles the i-th pair in
    ``itertools.combinations(range(n), 2)`` order.  Used by exhaustive
    enumeration and by randomized tests; the numbering is part of the
    contract.
    """
    adj = [0] * n
    for i, (u, v) in enumerate(itertools.combinations(range(n), 2)):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph.from_adj_masks(n, adj)


# -- twins and quotient -------------------------------------------------


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex set into closed-neighborhood classes.

    ``classes`` are sorted internally and ordered by their minimum
    member; ``representative_map`` sends each vertex to the minimum
    vertex of its class; ``t`` counts classes of size at least two.
    """

    classes: tuple
    t: int
    representative_map: dict

    @property
    def representatives(self):
        return tuple(c[0] for c in self.classes)


def are_twins(g: Graph, u: int, v: int) -> bool:
    """True when u and v share the same closed neighborhood."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex pair (%r, %r) out of range" % (u, v))
    return g.closed[u] == g.closed[v]


def twin_partition(g: Graph) -> TwinPartition:
    groups = {}
    for v in range(g.n):
        groups.setdefault(g.closed[v], []).append(v)
    classes = sorted(groups.values(), key=lambda c: c[0])
    rep = {}
    for cls in classes:
        for v in cls:
            rep[v] = cls[0]
    t = sum(1 for cls in classes if len(cls) >= 2)
    return TwinPartition(tuple(tuple(c) for c in classes), t, rep)


def is_twin_free(g: Graph) -> bool:
    return len(set(g.closed)) == g.n


def quotient(g: Graph):
    """Induced subgraph on minimum-index twin-class representatives.

    Returns ``(graph, partition)``.  The quotient of a twin-free graph
    is the graph itself (up to the identity relabeling), and quotients
    are always twin-free.
    """
    part = twin_partition(g)
    q, _ = g.induced(part.representatives)
    return q, part


# -- cliques ------------------------------------------------------------


def max_clique_size(g: Graph, budget=None) -> int:
    """Exact maximum clique size by branch and bound.

    Uses a greedy-coloring upper bound for pruning.  ``budget`` is an
    optional node budget (see solvers.Budget); on exhaustion the search
    raises BudgetExceeded rather than return an unproven value.
    """
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    adj = g.adj
    best = 0

    def greedy_order(p_mask):
        # Color candidates greedily; vertices come back sorted by color,
        # which makes size+color an admissible bound during expansion.
        classes = []
        for v in bits(p_mask):
            for cls in classes:
                if not (adj[v] & cls[0]):
                    cls[0] |= 1 << v
                    cls[1].append(v)
                    break
            else:
                classes.append([1 << v, [v]])
        out = []
        for color, cls in enumerate(classes, start=1):
            for v in cls[1]:
                out.append((v, color))
        return out

    def expand(p_mask, size):
        nonlocal best
        if budget is not None:
            budget.spend()
        if not p_mask:
            if size > best:
                best = size
            return
        seq = greedy_order(p_mask)
        for v, color in reversed(seq):
            if size + color <= best:
                return
            expand(p_mask & adj[v], size + 1)
            p_mask &= ~(1 << v)

    expand(mask_of(order), 0)
    return best


# -- bipartition, degeneracy, join --------------------------------------


def bipartition(g: Graph):
    """Two-color the graph; returns (side0, side1) frozensets or None.

    Each component is rooted at its minimum vertex, which lands in
    side0.  Returns None when some component holds an odd cycle.
    """
    color = [-1] * g.n
    for comp in g.components():
        root = comp[0]
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def degeneracy(g: Graph):
    """Degeneracy and its elimination order.

    Returns ``(k, order)`` where ``order`` repeatedly removes a
    minimum-degree vertex (smallest index on ties).
    """
    alive = (1 << g.n) - 1
    deg = [g.degree(v) for v in range(g.n)]
    order = []
    k = 0
    for _ in range(g.n):
        v = min(bits(alive), key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        order.append(v)
        alive &= ~(1 << v)
        for w in bits(g.adj[v] & alive):
            deg[w] -= 1
    return k, order


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n1, n2 = g1.n, g2.n
    shift_all = ((1 << n2) - 1) << n1
    adj = []
    for v in range(n1):
        adj.append(g1.adj[v] | shift_all)
    low_all = (1 << n1) - 1
    for v in range(n2):
        adj.append((g2.adj[v] << n1) | low_all)
    labels = None
    if g1.labels is not None or g2.labels is not None:
        left = g1.labels or tuple(str(v) for v in range(n1))
        right = g2.labels or tuple(str(v) for v in range(n2))
        labels = left + right
    return Graph.from_adj_masks(n1 + n2, adj, labels)


# -- isomorphism --------------------------------------------------------


def _refine_classes(g1: Graph, g2: Graph, rounds=None):
    """Joint 1-dimensional color refinement of both vertex sets.

    Returns (colors1, colors2) with comparable integer classes, or None
    when the class multisets already separate the graphs.
    """
    n = g1.n
    col1 = [g1.degree(v) for v in range(n)]
    col2 = [g2.degree(v) for v in range(n)]
    if rounds is None:
        rounds = n
    for _ in range(rounds):
        sig = {}
        new1, new2 = [], []
        for g, col, new in ((g1, col1, new1), (g2, col2, new2)):
            for v in range(n):
                key = (col[v], tuple(sorted(col[w] for w in bits(g.adj[v]))))
                new.append(sig.setdefault(key, len(sig)))
        if sorted(new1) != sorted(new2):
            return None
        if new1 == col1 and new2 == col2:
            break
        col1, col2 = new1, new2
    return col1, col2


def is_isomorphic(g1: Graph, g2: Graph, budget=None) -> bool:
    """Exact isomorphism test: refinement plus backtracking matching.

    Intended for small graphs; ``budget`` caps assignment attempts and
    exhaustion raises BudgetExceeded instead of answering wrongly.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    n = g1.n
    if n == 0:
        return True
    if sorted(map(int.bit_count, g1.adj)) != sorted(map(int.bit_count, g2.adj)):
        return False
    refined = _refine_classes(g1, g2)
    if refined is None:
        return False
    col1, col2 = refined
    class_size = {}
    for c in col1:
        class_size[c] = class_size.get(c, 0) + 1
    candidates = {}
    for c in set(col1):
        candidates[c] = [w for w in range(n) if col2[w] == c]

    # Vertex order: rarest refinement class first, then stay connected to
    # the already-mapped prefix so adjacency pruning bites early.
    order = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        attached = [v for v in remaining if g1.adj[v] & placed]
        pool = attached if attached else list(remaining)
        v = min(pool, key=lambda x: (class_size[col1[x]], -(g1.adj[x] & placed).bit_count(), x))
        order.append(v)
        remaining.remove(v)
        placed |= 1 << v

    image = [-1] * n
    used2 = 0

    def match(i):
        nonlocal used2
        if i == n:
            return True
        v = order[i]
        adj_imaged = 0
        for w in bits(g1.adj[v]):
            if image[w] >= 0:
                adj_imaged |= 1 << image[w]
        mapped_mask = used2
        for w in candidates[col1[v]]:
            if used2 >> w & 1:
                continue
            if budget is not None:
                budget.spend()
            if g2.adj[w] & mapped_mask != adj_imaged:
                continue
            image[v] = w
            used2 |= 1 << w
            if match(i + 1):
                return True
            image[v] = -1
            used2 &= ~(1 << w)
        return False

    return match(0)
