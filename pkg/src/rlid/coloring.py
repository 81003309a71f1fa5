"""Colorings and the verification side of the library.

A coloring is a total map vertex -> positive color.  The central
predicate: an assignment is rlid-valid when every adjacent pair of
non-twin vertices gets distinct closed-neighborhood color sets.  lid
additionally demands properness and exempts nothing; id demands
distinct neighborhood color sets for all vertex pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, bits


class ColoringError(ValueError):
    """Invalid coloring construction or verifier precondition."""


class Coloring:
    """Immutable vertex coloring with an explicit palette size."""

    __slots__ = ("colors", "palette")

    def __init__(self, colors, palette=None):
        colors = tuple(colors)
        for v, c in enumerate(colors):
            if not isinstance(c, int) or c < 1:
                raise ColoringError("vertex %d has non-positive color %r" % (v, c))
        top = max(colors, default=0)
        if palette is None:
            palette = top
        if palette < top:
            raise ColoringError(
                "palette %d smaller than maximum used color %d" % (palette, top)
            )
        self.colors = colors
        self.palette = palette

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    def __eq__(self, other):
        return (
            isinstance(other, Coloring)
            and self.colors == other.colors
            and self.palette == other.palette
        )

    def __hash__(self):
        return hash((self.colors, self.palette))

    def __repr__(self):
        return "Coloring(%r, palette=%d)" % (list(self.colors), self.palette)

    def used_colors(self):
        return frozenset(self.colors)


@dataclass(frozen=True)
class Violation:
    """One re-checkable verification failure.

    ``kind`` is one of "colorset" (equal neighborhood color sets),
    "proper" (monochromatic edge), "twins" (structurally impossible
    pair), "code-equal" (equal code intersections) or "undominated"
    (empty code intersection, reported with u == v).  ``witness`` holds
    the offending shared set.
    """

    u: int
    v: int
    adjacent: bool
    kind: str
    witness: frozenset


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    valid: bool
    violations: tuple

    def __bool__(self):
        return self.valid


def _check_sizes(g: Graph, c: Coloring):
    if len(c) != g.n:
        raise ColoringError(
            "coloring covers %d vertices but graph has %d" % (len(c), g.n)
        )


def _colorset_mask(g: Graph, colors, v: int) -> int:
    m = 0
    for w in bits(g.closed[v]):
        m |= 1 << colors[w]
    return m


def neighborhood_color_set(g: Graph, c: Coloring, v: int) -> frozenset:
    """Set of colors appearing on the closed neighborhood of v."""
    _check_sizes(g, c)
    if not 0 <= v < g.n:
        raise GraphError("vertex %d out of range" % v)
    return frozenset(c.colors[w] for w in bits(g.closed[v]))


# -- full-report verifiers ---------------------------------------------


def verify_rlid(g: Graph, c: Coloring) -> VerificationReport:
    """Check the relaxed locally identifying condition.

    Adjacent twins are exempt; every other adjacent pair must see
    distinct closed-neighborhood color sets.  The report lists every
    offending pair.
    """
    _check_sizes(g, c)
    colors = c.colors
    sets = [_colorset_mask(g, colors, v) for v in range(g.n)]
    bad = []
    for u, v in g.edges():
        if g.closed[u] == g.closed[v]:
            continue
        if sets[u] == sets[v]:
            bad.append(Violation(u, v, True, "colorset", frozenset(bits(sets[u]))))
    return VerificationReport("rlid", not bad, tuple(bad))


def verify_proper(g: Graph, c: Coloring) -> VerificationReport:
    _check_sizes(g, c)
    bad = []
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            bad.append(Violation(u, v, True, "proper", frozenset((c.colors[u],))))
    return VerificationReport("proper", not bad, tuple(bad))


def verify_lid(g: Graph, c: Coloring) -> VerificationReport:
    """Proper plus the identifying condition on all adjacent pairs.

    Adjacent twins can never be separated, so they come back as
    structural "twins" violations rather than an exemption.
    """
    _check_sizes(g, c)
    colors = c.colors
    sets = [_colorset_mask(g, colors, v) for v in range(g.n)]
    bad = []
    for u, v in g.edges():
        if colors[u] == colors[v]:
            bad.append(Violation(u, v, True, "proper", frozenset((colors[u],))))
        if g.closed[u] == g.closed[v]:
            bad.append(Violation(u, v, True, "twins", frozenset(bits(g.closed[u]))))
        elif sets[u] == sets[v]:
            bad.append(Violation(u, v, True, "colorset", frozenset(bits(sets[u]))))
    return VerificationReport("lid", not bad, tuple(bad))


def verify_id(g: Graph, c: Coloring) -> VerificationReport:
    """Distinct neighborhood color sets for every vertex pair.

    A graph with twins admits no such coloring; the twin pairs are
    reported and the answer is immediately invalid.
    """
    _check_sizes(g, c)
    colors = c.colors
    twins = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.closed[u] == g.closed[v]:
                twins.append(
                    Violation(u, v, g.has_edge(u, v), "twins", frozenset(bits(g.closed[u])))
                )
    if twins:
        return VerificationReport("id", False, tuple(twins))
    sets = [_colorset_mask(g, colors, v) for v in range(g.n)]
    bad = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if sets[u] == sets[v]:
                bad.append(
                    Violation(u, v, g.has_edge(u, v), "colorset", frozenset(bits(sets[u])))
                )
    return VerificationReport("id", not bad, tuple(bad))


def verify_identifying_code(g: Graph, code) -> VerificationReport:
    """Check that ``code`` dominates and separates all vertices.

    ``code`` is any iterable of vertices.  Violations: "undominated"
    for an empty intersection (u == v), "code-equal" for two vertices
    meeting the code identically.
    """
    code_mask = 0
    for v in code:
        if not 0 <= v < g.n:
            raise GraphError("code vertex %d out of range" % v)
        code_mask |= 1 << v
    inter = [g.closed[v] & code_mask for v in range(g.n)]
    bad = []
    for v in range(g.n):
        if not inter[v]:
            bad.append(Violation(v, v, False, "undominated", frozenset()))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if inter[u] == inter[v]:
                bad.append(
                    Violation(u, v, g.has_edge(u, v), "code-equal", frozenset(bits(inter[u])))
                )
    return VerificationReport("id-code", not bad, tuple(bad))


# -- fast boolean paths -------------------------------------------------


def is_rlid(g: Graph, c: Coloring) -> bool:
    """Short-circuit boolean version of verify_rlid."""
    _check_sizes(g, c)
    colors = c.colors
    sets = [_colorset_mask(g, colors, v) for v in range(g.n)]
    for u in range(g.n):
        au = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(au):
            if sets[u] == sets[v] and g.closed[u] != g.closed[v]:
                return False
    return True


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_sizes(g, c)
    for u in range(g.n):
        au = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(au):
            if c.colors[u] == c.colors[v]:
                return False
    return True


def is_lid(g: Graph, c: Coloring) -> bool:
    _check_sizes(g, c)
    colors = c.colors
    sets = [_colorset_mask(g, colors, v) for v in range(g.n)]
    for u in range(g.n):
        au = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(au):
            if colors[u] == colors[v]:
                return False
            if g.closed[u] == g.closed[v] or sets[u] == sets[v]:
                return False
    return True


def is_id(g: Graph, c: Coloring) -> bool:
    _check_sizes(g, c)
    sets = [_colorset_mask(g, c.colors, v) for v in range(g.n)]
    for u in range(g.n):
        if g.closed.count(g.closed[u]) > 1:
            return False
        for v in range(u + 1, g.n):
            if sets[u] == sets[v]:
                return False
    return True


def is_identifying_code(g: Graph, code) -> bool:
    code_mask = 0
    for v in code:
        code_mask |= 1 << v
    seen = {}
    for v in range(g.n):
        key = g.closed[v] & code_mask
        if not key or key in seen:
            return False
        seen[key] = v
    return True
