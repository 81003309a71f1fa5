"""Command line front end.

Subcommands: solve, decide, verify, bounds, quotient, construct,
color-bipartite, color-split, reduce, sweep.  Exit codes: 0 success,
1 infeasible or invalid, 2 usage error, 3 budget exhausted.  The
default node budget can be overridden with the RLID_NODE_BUDGET
environment variable.
"""

from __future__ import annotations

import argparse
import operator
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import bounds as bounds_mod
from . import families, io, solvers
from .coloring import (
    Coloring,
    ColoringError,
    verify_id,
    verify_identifying_code,
    verify_lid,
    verify_proper,
    verify_rlid,
)
from .graph import (
    BudgetExceeded,
    Graph,
    GraphError,
    bipartition,
    bits,
    graph_from_edge_mask,
    is_twin_free,
    max_clique_size,
    quotient,
    twin_partition,
)


class UsageError(ValueError):
    """Bad flag combination or malformed assertion expression."""


def _env_node_budget() -> int:
    raw = os.environ.get("RLID_NODE_BUDGET")
    if raw is None:
        return solvers.DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError("RLID_NODE_BUDGET must be an integer, got %r" % (raw,)) from None
    if value < 1:
        raise UsageError("RLID_NODE_BUDGET must be positive, got %d" % value)
    return value


@dataclass
class ExperimentConfig:
    """Everything one invocation needs; built by main(), consumed by cli_dispatch()."""

    command: str
    input_path: str | None = None
    graph_format: str = "auto"
    parameter: str = "rlid"
    k: int | None = None
    mode: str = "rlid"
    certificate_path: str | None = None
    family: str | None = None
    size: int | None = None
    action: str = "gadget"
    clique: str | None = None
    node_budget: int = solvers.DEFAULT_NODE_BUDGET
    time_budget_ms: float | None = None
    search_two: bool = False
    seed: int = 0
    count: int = 20
    min_n: int = 1
    max_n: int = 6
    clique_size: int = 6
    stable_size: int = 6
    edge_prob: float = 0.5
    up_to_iso: bool = False
    params: tuple = ("rlid",)
    assertion: str | None = None
    jobs: int = 1
    output: str = "plain"
    out_path: str | None = None
    strict: bool = True


# -- assertion mini-grammar ---------------------------------------------

_SWEEP_PARAMS = (
    "n", "m", "t", "omega", "chromatic", "rlid", "lid", "id",
    "gammaid", "quotient_rlid",
)
_CMP = {
    "<=": operator.le, ">=": operator.ge, "==": operator.eq,
    "!=": operator.ne, "<": operator.lt, ">": operator.gt,
}


def _parse_terms(text: str):
    tokens = re.findall(r"[A-Za-z_][A-Za-z0-9_]*|\d+|\S", text)
    terms = []
    sign, expect_atom = 1, True
    for tok in tokens:
        if expect_atom:
            if tok.isdigit():
                terms.append((sign, int(tok)))
            elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
                if tok not in _SWEEP_PARAMS:
                    raise UsageError(
                        "unknown name %r in assertion (allowed: %s)"
                        % (tok, ", ".join(_SWEEP_PARAMS))
                    )
                terms.append((sign, tok))
            else:
                raise UsageError("expected a name or integer, got %r" % (tok,))
            sign, expect_atom = 1, False
        else:
            if tok == "+":
                sign = 1
            elif tok == "-":
                sign = -1
            else:
                raise UsageError("expected + or - before %r" % (tok,))
            expect_atom = True
    if expect_atom or not terms:
        raise UsageError("incomplete expression %r" % (text,))
    return terms


def parse_assertion(expr: str):
    """Compile "rlid <= omega + 2" style checks.

    Grammar: side CMP side, each side a +/- chain of parameter names
    and integer literals.  Returns (referenced names, evaluator); the
    evaluator maps a {name: value} environment to a bool.
    """
    m = re.fullmatch(r"(.*?)(<=|>=|==|!=|<|>)(.*)", expr, re.S)
    if m is None:
        raise UsageError("assertion %r has no comparison operator" % (expr,))
    left, op, right = _parse_terms(m.group(1)), _CMP[m.group(2)], _parse_terms(m.group(3))
    names = frozenset(a for side in (left, right) for _, a in side if isinstance(a, str))

    def evaluate(env) -> bool:
        def total(side):
            return sum(s * (env[a] if isinstance(a, str) else a) for s, a in side)

        return op(total(left), total(right))

    return names, evaluate


# -- shared helpers -----------------------------------------------------


def _budget(cfg: ExperimentConfig) -> solvers.Budget:
    return solvers.Budget(max_nodes=cfg.node_budget, time_budget_ms=cfg.time_budget_ms)


def _sniff_format(text: str) -> str:
    # dimacs always opens with "c ..." or "p edge ..."; an edgelist opens
    # with "#" comments or the vertex count, so the first line settles it
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split(None, 1)[0]
        return "dimacs" if head in ("c", "p") else "edgelist"
    return "edgelist"


def _load_graph(cfg: ExperimentConfig) -> Graph:
    if cfg.input_path is None:
        raise UsageError("this command needs --input")
    if cfg.input_path == "-":
        text = sys.stdin.read()
    else:
        with open(cfg.input_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    fmt = cfg.graph_format if cfg.graph_format != "auto" else _sniff_format(text)
    return io.parse_graph_text(text, fmt, cfg.strict)


def _emit_bytes(data: bytes, cfg: ExperimentConfig):
    if cfg.out_path:
        with open(cfg.out_path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())


def _emit_coloring(c: Coloring, cfg: ExperimentConfig, g: Graph | None = None):
    if cfg.output == "json":
        _emit_bytes(io.write_result(c, "json"), cfg)
    elif cfg.output == "dot" and g is not None:
        _emit_bytes(io.export_dot(g, c), cfg)
    else:
        _emit_bytes("".join("%d %d\n" % (v, k) for v, k in enumerate(c.colors)).encode(), cfg)


def _print_solve_plain(res: solvers.SolveResult, cfg: ExperimentConfig):
    lines = []
    if res.status == "exact":
        lines.append("%s = %d" % (res.parameter, res.value))
    else:
        lines.append("%s unresolved: node budget exhausted" % res.parameter)
    lines.append("# nodes=%d wall_ms=%.1f" % (res.stats.nodes, res.stats.wall_ms))
    if isinstance(res.witness, Coloring):
        lines += ["%d %d" % (v, k) for v, k in enumerate(res.witness.colors)]
    elif isinstance(res.witness, frozenset):
        lines.append(" ".join(str(v) for v in sorted(res.witness)))
    _emit_bytes(("\n".join(lines) + "\n").encode(), cfg)


# -- command handlers ---------------------------------------------------


def _cmd_solve(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    parameter = "chromatic" if cfg.parameter == "proper" else cfg.parameter
    if parameter == "gammaid":
        res = solvers.gamma_id_exact(g, _budget(cfg))
    elif parameter in ("rlid", "lid", "id", "chromatic"):
        res = solvers.chi_exact(g, parameter, _budget(cfg), search_two=cfg.search_two)
    else:
        raise UsageError("unknown parameter %r" % (cfg.parameter,))
    if cfg.output in ("json", "tsv"):
        _emit_bytes(io.write_result(res, cfg.output), cfg)
    else:
        _print_solve_plain(res, cfg)
    return 3 if res.status == "budget-exceeded" else 0


def _cmd_decide(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    if cfg.k is None or cfg.k < 0:
        raise UsageError("decide needs --k >= 0")
    deciders = {
        "rlid": solvers.decide_k_rlid,
        "lid": solvers.decide_k_lid,
        "id": solvers.decide_k_id,
        "chromatic": solvers.decide_k_proper,
        "proper": solvers.decide_k_proper,
    }
    if cfg.parameter not in deciders:
        raise UsageError("unknown parameter %r" % (cfg.parameter,))
    found = deciders[cfg.parameter](g, cfg.k, _budget(cfg))
    if found is None:
        print("no %s coloring with %d colors" % (cfg.parameter, cfg.k))
        return 1
    _emit_coloring(found, cfg, g)
    return 0


def _cmd_verify(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    if cfg.certificate_path is None:
        raise UsageError("verify needs --certificate")
    if cfg.mode == "code":
        code = io.parse_vertex_set_file(cfg.certificate_path, g.n)
        report = verify_identifying_code(g, code)
    else:
        verifiers = {
            "rlid": verify_rlid, "lid": verify_lid,
            "id": verify_id, "proper": verify_proper,
        }
        if cfg.mode not in verifiers:
            raise UsageError("unknown verification mode %r" % (cfg.mode,))
        c = io.parse_coloring_file(cfg.certificate_path, g.n)
        report = verifiers[cfg.mode](g, c)
    if cfg.output in ("json", "tsv"):
        _emit_bytes(io.write_result(report, cfg.output), cfg)
    else:
        print("%s: %s" % (report.mode, "valid" if report.valid else "invalid"))
        for x in report.violations:
            rel = "adjacent" if x.adjacent else "non-adjacent"
            print("  %s pair (%d, %d): %s" % (rel, x.u, x.v, x.kind))
    return 0 if report.valid else 1


def _cmd_bounds(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    report = bounds_mod.bounds_report(g, budget=_budget(cfg))
    if cfg.output in ("json", "tsv"):
        _emit_bytes(io.write_result(report, cfg.output), cfg)
        return 0
    for value, prov in report.lower_bounds:
        print("lower %d  (%s)" % (value, prov))
    for value, prov in report.upper_bounds:
        print("upper %d  (%s)" % (value, prov))
    print("best: %d..%d%s" % (
        report.best_lower, report.best_upper,
        "  exact=%d" % report.exact if report.exact is not None else "",
    ))
    for note in report.notes:
        print("note: %s" % note)
    return 0


def _cmd_quotient(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    q, part = quotient(g)
    if cfg.output == "dot":
        _emit_bytes(io.export_dot(q), cfg)
        return 0
    comments = ["twin classes with >= 2 members: %d" % part.t]
    comments += [
        "class %d: %s" % (i, " ".join(map(str, cls)))
        for i, cls in enumerate(part.classes)
    ]
    _emit_bytes(io.write_graph_edgelist(q, comments), cfg)
    return 0


_FAMILIES = ("star", "power-path", "hp", "q1", "q2", "prop1", "gstar")


def _make_family(cfg: ExperimentConfig):
    if cfg.family == "gstar":
        return families.g_star(_load_graph(cfg))
    if cfg.size is None:
        raise UsageError("construct needs --size for family %r" % (cfg.family,))
    p = cfg.size
    if cfg.family == "star":
        return families.star(p)
    if cfg.family == "power-path":
        g = families.power_path(p)
        return families.FamilyInstance(g, None, None, None, dict(enumerate(g.labels)))
    if cfg.family == "hp":
        return families.h_p(p)
    if cfg.family == "q1":
        return families.q1(p)
    if cfg.family == "q2":
        return families.q2(p)
    if cfg.family == "prop1":
        return families.prop1_graph(p)
    raise UsageError("unknown family %r (choose from %s)" % (cfg.family, ", ".join(_FAMILIES)))


def _cmd_construct(cfg: ExperimentConfig) -> int:
    inst = _make_family(cfg)
    g = inst.graph
    if cfg.output == "dot":
        _emit_bytes(io.export_dot(g, inst.canonical_coloring), cfg)
        return 0
    if cfg.output == "json":
        import json

        obj = {
            "family": cfg.family,
            "n": g.n,
            "edges": [[u, v] for u, v in g.edges()],
            "roles": {str(v): r for v, r in inst.roles.items()},
            "expected_rlid": inst.expected_chi_rlid,
            "coloring": None if inst.canonical_coloring is None
                        else [[v, c] for v, c in enumerate(inst.canonical_coloring.colors)],
        }
        _emit_bytes((json.dumps(obj, sort_keys=True, indent=2) + "\n").encode(), cfg)
        return 0
    comments = ["family %s  order %d" % (cfg.family, g.n)]
    if inst.expected_chi_rlid is not None:
        comments.append("expected rlid chromatic number: %d" % inst.expected_chi_rlid)
    for v in range(g.n):
        parts = ["vertex %d" % v, "role=%s" % inst.roles.get(v, "?")]
        if inst.canonical_coloring is not None:
            parts.append("color=%d" % inst.canonical_coloring.colors[v])
        comments.append("  ".join(parts))
    _emit_bytes(io.write_graph_edgelist(g, comments), cfg)
    return 0


def _cmd_color_bipartite(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    c, levels = families.bipartite_three_coloring(g)
    if cfg.output == "plain":
        print("# root %d, %d levels" % (levels.root, len(levels.levels)))
    _emit_coloring(c, cfg, g)
    return 0


def _parse_vertex_list(text: str, n: int) -> frozenset:
    try:
        chosen = frozenset(int(tok) for tok in re.split(r"[,\s]+", text.strip()) if tok)
    except ValueError:
        raise UsageError("bad vertex list %r" % (text,)) from None
    if any(not 0 <= v < n for v in chosen):
        raise UsageError("vertex list %r out of range 0..%d" % (text, n - 1))
    return chosen


def _cmd_color_split(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    if cfg.clique is not None:
        clique = _parse_vertex_list(cfg.clique, g.n)
        part = families.SplitPartition(clique, frozenset(range(g.n)) - clique)
    else:
        part = families.find_split_partition(g)
        if part is None:
            print("no clique/stable partition exists", file=sys.stderr)
            return 1
    c = families.split_rlid_coloring(g, part)
    if cfg.output == "plain":
        sep = families.split_separator(g, part)
        print("# clique %s" % " ".join(map(str, sorted(part.clique))))
        print("# separator %s" % " ".join(map(str, sorted(sep))))
    _emit_coloring(c, cfg, g)
    return 0


def _cmd_reduce(cfg: ExperimentConfig) -> int:
    g = _load_graph(cfg)
    inst = families.g_star(g)
    if cfg.action == "gadget":
        comments = ["gadget of a %d-vertex input, order %d" % (g.n, inst.graph.n)]
        comments += ["vertex %d  role=%s" % (v, inst.roles[v]) for v in range(inst.graph.n)]
        _emit_bytes(io.write_graph_edgelist(inst.graph, comments), cfg)
        return 0
    if cfg.certificate_path is None:
        raise UsageError("reduce --action %s needs --certificate" % cfg.action)
    if cfg.action == "lift":
        if cfg.k is None:
            raise UsageError("reduce --action lift needs --k")
        base = io.parse_coloring_file(cfg.certificate_path, g.n)
        _emit_coloring(families.lift_coloring_gstar(g, base, cfg.k, inst), cfg, inst.graph)
        return 0
    if cfg.action == "project":
        gadget_col = io.parse_coloring_file(cfg.certificate_path, inst.graph.n)
        _emit_coloring(families.project_coloring_gstar(inst, gadget_col), cfg, g)
        return 0
    raise UsageError("unknown reduce action %r" % (cfg.action,))


# -- sweep --------------------------------------------------------------


def _random_twins_graph(seed: int) -> Graph:
    """Small seeded graph with at least one deliberate closed-twin pair."""
    import random as _random

    rng = _random.Random(seed)
    n = rng.randint(3, 7)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5]
    g = Graph(n, edges)
    for _ in range(rng.randint(1, 2)):
        x = rng.randrange(g.n)
        closed = g.adj[x] | (1 << x)
        masks = list(g.adj) + [closed]
        for v in bits(closed):
            masks[v] |= 1 << g.n
        g = Graph.from_adj_masks(g.n + 1, masks)
    return g


def _sweep_graphs(cfg: ExperimentConfig):
    """Yield (family, index, graph) deterministically."""
    fam = cfg.family or "connected"
    if fam in ("all", "connected", "bipartite", "twin-free", "split"):
        predicate = {
            "all": None,
            "connected": Graph.is_connected,
            "bipartite": lambda g: bipartition(g) is not None,
            "twin-free": is_twin_free,
            "split": lambda g: families.find_split_partition(g) is not None,
        }[fam]
        index = 0
        for order in range(cfg.min_n, cfg.max_n + 1):
            for g in solvers.enumerate_graphs(order, predicate, up_to_iso=cfg.up_to_iso):
                yield fam, index, g
                index += 1
    elif fam == "random-split":
        for i in range(cfg.count):
            g, _ = solvers.random_split_graph(
                cfg.seed + i, cfg.clique_size, cfg.stable_size, cfg.edge_prob
            )
            yield fam, i, g
    elif fam == "random-twins":
        for i in range(cfg.count):
            yield fam, i, _random_twins_graph(cfg.seed + i)
    else:
        raise UsageError(
            "unknown sweep family %r (all, connected, bipartite, twin-free, "
            "split, random-split, random-twins)" % (fam,)
        )


def _edge_mask(g: Graph) -> int:
    mask = 0
    for i, (u, v) in enumerate(combinations(range(g.n), 2)):
        if g.adj[u] >> v & 1:
            mask |= 1 << i
    return mask


def _sweep_row(task):
    """Compute one row; module-level so a process pool can pickle it."""
    fam, index, n, mask, names, node_budget = task
    g = graph_from_edge_mask(n, mask)
    row = {}
    for name in names:
        try:
            if name == "n":
                row[name] = g.n
            elif name == "m":
                row[name] = g.edge_count
            elif name == "t":
                row[name] = twin_partition(g).t
            elif name == "omega":
                row[name] = max_clique_size(g)
            elif name == "chromatic":
                row[name] = solvers.chi_exact(g, "chromatic", solvers.Budget(node_budget)).value
            elif name == "gammaid":
                row[name] = solvers.gamma_id_exact(g, solvers.Budget(node_budget)).value
            elif name == "quotient_rlid":
                q, _ = quotient(g)
                row[name] = solvers.chi_exact(
                    q, "rlid", solvers.Budget(node_budget), search_two=True
                ).value
            elif name in ("rlid", "lid", "id"):
                row[name] = solvers.chi_exact(
                    g, name, solvers.Budget(node_budget), search_two=True
                ).value
            else:
                raise UsageError("unknown sweep parameter %r" % (name,))
        except (GraphError, BudgetExceeded):
            row[name] = None
    return fam, index, n, mask, row


def _cmd_sweep(cfg: ExperimentConfig) -> int:
    for name in cfg.params:
        if name not in _SWEEP_PARAMS:
            raise UsageError(
                "unknown sweep parameter %r (allowed: %s)" % (name, ", ".join(_SWEEP_PARAMS))
            )
    check = None
    names = tuple(cfg.params)
    if cfg.assertion:
        needed, check = parse_assertion(cfg.assertion)
        names += tuple(x for x in sorted(needed) if x not in names)
    tasks = [
        (fam, index, g.n, _edge_mask(g), names, cfg.node_budget)
        for fam, index, g in _sweep_graphs(cfg)
    ]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_sweep_row, tasks, chunksize=64))
    else:
        results = [_sweep_row(t) for t in tasks]

    header = ["family", "n", "index", "mask"] + list(names)
    if check is not None:
        header.append("assert")
    out = ["\t".join(header)]
    failures = skipped = 0
    for fam, index, n, mask, row in results:
        cells = [fam, str(n), str(index), str(mask)]
        cells += ["-" if row[name] is None else str(row[name]) for name in names]
        if check is not None:
            if any(row[name] is None for name in row):
                verdict = "skip"
                skipped += 1
            elif check(row):
                verdict = "pass"
            else:
                verdict = "fail"
                failures += 1
            cells.append(verdict)
        out.append("\t".join(cells))
    _emit_bytes(("\n".join(out) + "\n").encode(), cfg)
    print(
        "sweep: %d graphs, %d failures, %d skipped" % (len(results), failures, skipped),
        file=sys.stderr,
    )
    return 1 if failures else 0


_HANDLERS = {
    "solve": _cmd_solve,
    "decide": _cmd_decide,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "quotient": _cmd_quotient,
    "construct": _cmd_construct,
    "color-bipartite": _cmd_color_bipartite,
    "color-split": _cmd_color_split,
    "reduce": _cmd_reduce,
    "sweep": _cmd_sweep,
}


def cli_dispatch(cfg: ExperimentConfig) -> int:
    handler = _HANDLERS.get(cfg.command)
    if handler is None:
        raise UsageError("unknown command %r" % (cfg.command,))
    return handler(cfg)


# -- argument parsing ---------------------------------------------------


def _add_io_args(sub, needs_input=True):
    if needs_input:
        sub.add_argument("--input", "-i", dest="input_path", required=False,
                         help="graph file; '-' reads stdin")
    sub.add_argument("--format", dest="graph_format", default="auto",
                     choices=("auto", "dimacs", "edgelist"))
    sub.add_argument("--lenient", dest="strict", action="store_false",
                     help="tolerate an edge-count mismatch in dimacs headers")
    sub.add_argument("--output", "-o", dest="output", default="plain",
                     choices=("plain", "json", "tsv", "dot"))
    sub.add_argument("--out", dest="out_path", default=None,
                     help="write to a file instead of stdout")


def _add_budget_args(sub):
    sub.add_argument("--node-budget", type=int, default=None,
                     help="search node limit (default RLID_NODE_BUDGET or %d)"
                          % solvers.DEFAULT_NODE_BUDGET)
    sub.add_argument("--time-budget-ms", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlid",
        description="Relaxed locally identifying colorings: exact solvers, "
                    "verifiers, constructions, bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact optimum of a coloring parameter")
    _add_io_args(s)
    _add_budget_args(s)
    s.add_argument("--parameter", default="rlid",
                   choices=("rlid", "lid", "id", "chromatic", "proper", "gammaid"))
    s.add_argument("--search-two", action="store_true",
                   help="also try two colors instead of citing the no-two-color rule")

    s = sub.add_parser("decide", help="is there a valid coloring with k colors?")
    _add_io_args(s)
    _add_budget_args(s)
    s.add_argument("--parameter", default="rlid",
                   choices=("rlid", "lid", "id", "chromatic", "proper"))
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("verify", help="check a coloring or code file")
    _add_io_args(s)
    s.add_argument("--mode", default="rlid", choices=("rlid", "lid", "id", "proper", "code"))
    s.add_argument("--certificate", dest="certificate_path", required=True,
                   help="coloring file ('vertex color' lines) or vertex set for --mode code")

    s = sub.add_parser("bounds", help="cheap lower/upper bounds report")
    _add_io_args(s)
    _add_budget_args(s)

    s = sub.add_parser("quotient", help="collapse twin classes to representatives")
    _add_io_args(s)

    s = sub.add_parser("construct", help="emit a named family instance")
    _add_io_args(s, needs_input=True)
    s.add_argument("family", choices=_FAMILIES)
    s.add_argument("--size", "--p", "-p", type=int, default=None,
                   help="family size parameter (leaves, clique exponent, ...)")
    s.add_argument("--dot", action="store_true", help="shorthand for --output dot")

    s = sub.add_parser("color-bipartite", help="three-color a connected bipartite graph")
    _add_io_args(s)

    s = sub.add_parser("color-split", help="color a split graph within clique size + 2")
    _add_io_args(s)
    s.add_argument("--clique", default=None,
                   help="comma separated clique side; found exhaustively if omitted")

    s = sub.add_parser("reduce", help="proper-coloring gadget: emit, lift, project")
    _add_io_args(s)
    s.add_argument("--action", default="gadget", choices=("gadget", "lift", "project"))
    s.add_argument("--certificate", dest="certificate_path", default=None)
    s.add_argument("--k", type=int, default=None)

    s = sub.add_parser("sweep", help="tabulate parameters over a graph family")
    _add_io_args(s, needs_input=False)
    _add_budget_args(s)
    s.add_argument("--family", default="connected",
                   choices=("all", "connected", "bipartite", "twin-free", "split",
                            "random-split", "random-twins"))
    s.add_argument("--min-n", type=int, default=1)
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--count", type=int, default=20, help="draws for random families")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--clique-size", type=int, default=6)
    s.add_argument("--stable-size", type=int, default=6)
    s.add_argument("--edge-prob", type=float, default=0.5)
    s.add_argument("--up-to-iso", action="store_true",
                   help="keep one representative per isomorphism class")
    s.add_argument("--params", default="rlid",
                   help="comma separated: %s" % ", ".join(_SWEEP_PARAMS))
    s.add_argument("--assert", dest="assertion", default=None,
                   help='per-graph check, e.g. "rlid <= omega + 2"')
    s.add_argument("--jobs", type=int, default=1)

    return parser


def config_from_args(ns: argparse.Namespace) -> ExperimentConfig:
    cfg = ExperimentConfig(command=ns.command)
    for name, value in vars(ns).items():
        if name == "params":
            value = tuple(x for x in value.split(",") if x)
        if name == "node_budget" and value is None:
            value = _env_node_budget()
        if value is not None and hasattr(cfg, name):
            setattr(cfg, name, value)
    if getattr(ns, "dot", False):
        cfg.output = "dot"
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return cli_dispatch(cfg)
    except BrokenPipeError:
        return 0
    except BudgetExceeded as exc:
        print("budget exhausted: %s" % exc, file=sys.stderr)
        return 3
    except families.TheoremCounterexample as exc:
        print("GUARANTEE FAILED: %s" % exc, file=sys.stderr)
        return 1
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except (io.ParseError, GraphError, ColoringError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
