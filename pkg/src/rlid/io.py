"""File formats: graph parsing, result serialization, DOT export.

Two graph formats.  "dimacs": optional comment lines "c ...", one
header "p edge <n> <m>", then edge lines "e <u> <v>" with 1-indexed
endpoints.  "edgelist": '#' comments, first significant line the
vertex count, then 0-indexed "u v" pairs.  Parse errors name the line
number; duplicate edges collapse with a counted warning.
"""

from __future__ import annotations

import json
import logging

from .bounds import BoundsReport
from .coloring import Coloring, VerificationReport
from .graph import Graph, build_graph
from .solvers import SolveResult

log = logging.getLogger(__name__)

_DOT_FILL = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)


class ParseError(ValueError):
    """Malformed input file; the message names the offending line."""


def _significant_lines(text: str, comment_prefixes):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if any(line.startswith(p) for p in comment_prefixes):
            continue
        yield lineno, line


def parse_graph_text(text: str, fmt: str, strict: bool = True) -> Graph:
    if fmt == "dimacs":
        return _parse_dimacs(text, strict)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise ParseError("unknown graph format %r (expected dimacs or edgelist)" % (fmt,))


def parse_graph_file(path, fmt: str = "edgelist", strict: bool = True) -> Graph:
    """Read a graph file; see the module docstring for the two formats."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), fmt, strict)


def _parse_dimacs(text: str, strict: bool) -> Graph:
    n = None
    declared_m = None
    edges = []
    edge_lines = 0
    for lineno, line in _significant_lines(text, ("c",)):
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("line %d: second problem line" % lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("line %d: malformed problem line %r" % (lineno, line))
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("line %d: non-numeric problem line %r" % (lineno, line)) from None
        elif fields[0] == "e":
            if n is None:
                raise ParseError("line %d: edge before problem line" % lineno)
            if len(fields) != 3:
                raise ParseError("line %d: malformed edge line %r" % (lineno, line))
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("line %d: non-numeric edge %r" % (lineno, line)) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(
                    "line %d: endpoint out of range 1..%d in %r" % (lineno, n, line)
                )
            if u == v:
                raise ParseError("line %d: self-loop %r" % (lineno, line))
            edge_lines += 1
            edges.append((u - 1, v - 1))
        else:
            raise ParseError("line %d: unrecognized line %r" % (lineno, line))
    if n is None:
        raise ParseError("no problem line found")
    if strict and edge_lines != declared_m:
        raise ParseError(
            "edge count mismatch: header declares %d, found %d edge lines"
            % (declared_m, edge_lines)
        )
    distinct = {(min(u, v), max(u, v)) for u, v in edges}
    dupes = len(edges) - len(distinct)
    if dupes:
        log.warning("collapsed %d duplicate edge declarations", dupes)
    return build_graph(n, sorted(distinct))


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in _significant_lines(text, ("#",)):
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("line %d: expected the vertex count, got %r" % (lineno, line))
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError("line %d: non-numeric vertex count %r" % (lineno, line)) from None
            continue
        if len(fields) != 2:
            raise ParseError("line %d: expected 'u v', got %r" % (lineno, line))
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("line %d: non-numeric edge %r" % (lineno, line)) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("line %d: endpoint out of range 0..%d" % (lineno, n - 1))
        if u == v:
            raise ParseError("line %d: self-loop" % lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty graph file")
    distinct = {(min(u, v), max(u, v)) for u, v in edges}
    dupes = len(edges) - len(distinct)
    if dupes:
        log.warning("collapsed %d duplicate edge declarations", dupes)
    return build_graph(n, sorted(distinct))


def write_graph_edgelist(g: Graph, comments=()) -> bytes:
    lines = ["# %s" % c for c in comments]
    lines.append(str(g.n))
    lines += ["%d %d" % e for e in g.edges()]
    return ("\n".join(lines) + "\n").encode()


def write_graph_dimacs(g: Graph, comments=()) -> bytes:
    """Emit "p edge n m" plus 1-indexed "e u v" lines."""
    lines = ["c %s" % c for c in comments]
    lines.append("p edge %d %d" % (g.n, g.edge_count))
    lines += ["e %d %d" % (u + 1, v + 1) for u, v in g.edges()]
    return ("\n".join(lines) + "\n").encode()


def parse_coloring_file(path, n: int) -> Coloring:
    """Two-column "vertex color" file, 0-indexed vertices, total on 0..n-1."""
    assigned = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in _significant_lines(fh.read(), ("#",)):
            fields = line.split()
            if len(fields) != 2:
                raise ParseError("line %d: expected 'vertex color', got %r" % (lineno, line))
            try:
                v, c = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("line %d: non-numeric entry %r" % (lineno, line)) from None
            if not 0 <= v < n:
                raise ParseError("line %d: vertex %d out of range 0..%d" % (lineno, v, n - 1))
            if v in assigned:
                raise ParseError("line %d: vertex %d assigned twice" % (lineno, v))
            assigned[v] = c
    missing = [v for v in range(n) if v not in assigned]
    if missing:
        raise ParseError("no color for vertices %r" % (missing[:10],))
    return Coloring(tuple(assigned[v] for v in range(n)))


def parse_vertex_set_file(path, n: int) -> frozenset:
    """Whitespace-separated vertex indices, '#' comments."""
    out = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in _significant_lines(fh.read(), ("#",)):
            for tok in line.split():
                try:
                    v = int(tok)
                except ValueError:
                    raise ParseError("line %d: non-numeric vertex %r" % (lineno, tok)) from None
                if not 0 <= v < n:
                    raise ParseError("line %d: vertex %d out of range" % (lineno, v))
                out.add(v)
    return frozenset(out)


# -- result serialization ----------------------------------------------


def _jsonable(result):
    if isinstance(result, SolveResult):
        witness = result.witness
        if isinstance(witness, Coloring):
            witness = [[v, c] for v, c in enumerate(witness.colors)]
        elif isinstance(witness, frozenset):
            witness = sorted(witness)
        return {
            "parameter": result.parameter,
            "value": result.value,
            "status": result.status,
            "witness": witness,
            # wall time stays out: serialized results must be byte-reproducible
            "stats": {"nodes": result.stats.nodes},
        }
    if isinstance(result, BoundsReport):
        return {
            "bounds": {
                "lower": [[v, prov] for v, prov in result.lower_bounds],
                "upper": [[v, prov] for v, prov in result.upper_bounds],
            },
            "best_lower": result.best_lower,
            "best_upper": result.best_upper,
            "exact": result.exact,
            "notes": list(result.notes),
        }
    if isinstance(result, VerificationReport):
        return {
            "mode": result.mode,
            "valid": result.valid,
            "violations": [
                {
                    "u": x.u,
                    "v": x.v,
                    "adjacent": x.adjacent,
                    "kind": x.kind,
                    "witness": sorted(x.witness),
                }
                for x in result.violations
            ],
        }
    if isinstance(result, Coloring):
        return {
            "colors": [[v, c] for v, c in enumerate(result.colors)],
            "palette": result.palette,
        }
    raise TypeError("cannot serialize %r" % (type(result),))


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], prefix + k + "." if prefix else k + ".")
    else:
        yield prefix.rstrip("."), obj


def write_result(result, fmt: str = "json") -> bytes:
    """Serialize a solve/bounds/verification result; stable field order."""
    obj = _jsonable(result)
    if fmt == "json":
        return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode()
    if fmt == "tsv":
        pairs = list(_flatten(obj))
        head = "\t".join(k for k, _ in pairs)
        row = "\t".join(json.dumps(v, sort_keys=True) for _, v in pairs)
        return (head + "\n" + row + "\n").encode()
    raise ParseError("unknown result format %r (expected json or tsv)" % (fmt,))


def export_dot(g: Graph, coloring: Coloring | None = None) -> bytes:
    """Graphviz source; colors cycle a fixed 12-entry fill palette."""
    lines = ["graph G {", "  node [style=filled];"]
    for v in range(g.n):
        attrs = []
        if coloring is not None:
            c = coloring.colors[v]
            attrs.append('label="%d:%d"' % (v, c))
            attrs.append('fillcolor="%s"' % _DOT_FILL[(c - 1) % len(_DOT_FILL)])
        else:
            attrs.append('label="%d"' % v)
            attrs.append('fillcolor="white"')
        if g.labels is not None:
            attrs.append('tooltip="%s"' % g.labels[v].replace('"', ""))
        lines.append("  %d [%s];" % (v, ", ".join(attrs)))
    for u, v in g.edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()
