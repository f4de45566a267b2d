"""Total assignments of colors to graph elements and their diagnostics.

A coloring always assigns a color in 0..max_degree to every vertex and
every edge.  Whether it is a proper semi-total coloring (STC: proper edge
coloring + every vertex differs from its incident edges) or a total
coloring (TC: additionally adjacent vertices differ) is *computed*, never
assumed, so invalid colorings stay representable for diagnostics.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, HamiltonDecomposition, max_degree


class ColoringError(ValueError):
    """Raised for out-of-range colors, length mismatches and bad patterns."""


@dataclass(frozen=True)
class Coloring:
    graph: Graph
    vertex_colors: tuple[int, ...]
    edge_colors: tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.vertex_colors) != g.n or len(self.edge_colors) != g.m:
            raise ColoringError("color arrays do not match the graph")
        hi = self.palette
        for c in self.vertex_colors:
            if not (0 <= c < hi):
                raise ColoringError(f"vertex color {c} outside 0..{hi - 1}")
        for c in self.edge_colors:
            if not (0 <= c < hi):
                raise ColoringError(f"edge color {c} outside 0..{hi - 1}")

    @property
    def palette(self) -> int:
        return max_degree(self.graph) + 1

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Hashable identity of the assignment, used by search visited-sets."""
        return (self.vertex_colors, self.edge_colors)

    def replace(self, vertex_colors=None, edge_colors=None) -> "Coloring":
        return Coloring(
            self.graph,
            tuple(vertex_colors if vertex_colors is not None else self.vertex_colors),
            tuple(edge_colors if edge_colors is not None else self.edge_colors),
        )

    def to_json(self, graph_name: Optional[str] = None) -> dict:
        gref = graph_name or self.graph.name
        return {
            "graph": gref if gref is not None else self.graph.to_json(),
            "palette": self.palette,
            "vertex_colors": list(self.vertex_colors),
            "edge_colors": list(self.edge_colors),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json(obj: dict, graph: Optional[Graph] = None) -> "Coloring":
        if graph is None:
            if not isinstance(obj.get("graph"), dict):
                raise ColoringError("coloring JSON names a graph but none was supplied")
            graph = Graph.from_json(obj["graph"])
        mu = Coloring(graph, tuple(obj["vertex_colors"]), tuple(obj["edge_colors"]))
        if "palette" in obj and obj["palette"] != mu.palette:
            raise ColoringError(
                f"palette {obj['palette']} does not match max degree + 1 = {mu.palette}"
            )
        return mu


# -- validation ---------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    edge_conflicts: tuple[tuple[int, int], ...]      # pairs of adjacent edge indices
    incidence_conflicts: tuple[tuple[int, int], ...]  # (vertex, edge index)
    vertex_conflicts: tuple[int, ...]                 # edge indices joining same-colored vertices

    @property
    def proper_edges(self) -> bool:
        return not self.edge_conflicts

    @property
    def vertex_incidence_ok(self) -> bool:
        return not self.incidence_conflicts

    @property
    def vertex_adjacency_ok(self) -> bool:
        return not self.vertex_conflicts

    @property
    def is_stc(self) -> bool:
        return self.proper_edges and self.vertex_incidence_ok

    @property
    def is_tc(self) -> bool:
        return self.is_stc and self.vertex_adjacency_ok

    def to_json(self) -> dict:
        return {
            "proper_edges": self.proper_edges,
            "vertex_incidence_ok": self.vertex_incidence_ok,
            "vertex_adjacency_ok": self.vertex_adjacency_ok,
            "is_stc": self.is_stc,
            "is_tc": self.is_tc,
            "edge_conflicts": [list(p) for p in self.edge_conflicts],
            "incidence_conflicts": [list(p) for p in self.incidence_conflicts],
            "vertex_conflicts": list(self.vertex_conflicts),
        }


def validate(mu: Coloring) -> ValidationReport:
    """Report the three independent conditions with every violation listed."""
    g = mu.graph
    edge_conf: list[tuple[int, int]] = []
    inc_conf: list[tuple[int, int]] = []
    vert_conf: list[int] = []
    for v in range(g.n):
        inc = g.incident[v]
        for a in range(len(inc)):
            if mu.edge_colors[inc[a]] == mu.vertex_colors[v]:
                inc_conf.append((v, inc[a]))
            for b in range(a + 1, len(inc)):
                if mu.edge_colors[inc[a]] == mu.edge_colors[inc[b]]:
                    pair = (min(inc[a], inc[b]), max(inc[a], inc[b]))
                    edge_conf.append(pair)
    for ei, (u, v) in enumerate(g.edges):
        if mu.vertex_colors[u] == mu.vertex_colors[v]:
            vert_conf.append(ei)
    return ValidationReport(tuple(sorted(set(edge_conf))), tuple(inc_conf), tuple(vert_conf))


def is_valid_stc(mu: Coloring) -> bool:
    g = mu.graph
    ec, vc = mu.edge_colors, mu.vertex_colors
    for v in range(g.n):
        seen = 0
        cv = vc[v]
        for ei in g.incident[v]:
            bit = 1 << ec[ei]
            if seen & bit or ec[ei] == cv:
                return False
            seen |= bit
    return True


def beta_edges(mu: Coloring) -> tuple[int, ...]:
    """Edge indices whose endpoints share a color; the count is beta."""
    vc = mu.vertex_colors
    return tuple(ei for ei, (u, v) in enumerate(mu.graph.edges) if vc[u] == vc[v])


# -- class listings -----------------------------------------------------


@dataclass(frozen=True)
class ClassListing:
    vertex_counts: tuple[int, ...]
    edge_counts: tuple[int, ...]
    totals: tuple[int, ...]
    beta: int
    gamma: int
    is_stc: bool
    is_tc: bool
    lacunar_colors: tuple[int, ...]

    @property
    def is_equitable(self) -> bool:
        return self.gamma <= 1

    def to_json(self) -> dict:
        return {
            "vertex_counts": list(self.vertex_counts),
            "edge_counts": list(self.edge_counts),
            "totals": list(self.totals),
            "beta": self.beta,
            "gamma": self.gamma,
            "is_stc": self.is_stc,
            "is_tc": self.is_tc,
            "is_equitable": self.is_equitable,
            "lacunar_colors": list(self.lacunar_colors),
        }


def listing(mu: Coloring) -> ClassListing:
    """Per-color tallies plus beta and gamma.

    gamma is max total minus min total over all palette classes, empty
    classes included; it is defined for every coloring, not only TCs.
    """
    k = mu.palette
    vcount = [0] * k
    ecount = [0] * k
    for c in mu.vertex_colors:
        vcount[c] += 1
    for c in mu.edge_colors:
        ecount[c] += 1
    totals = tuple(vcount[c] + ecount[c] for c in range(k))
    rep = validate(mu)
    beta = len(rep.vertex_conflicts)
    return ClassListing(
        vertex_counts=tuple(vcount),
        edge_counts=tuple(ecount),
        totals=totals,
        beta=beta,
        gamma=max(totals) - min(totals),
        is_stc=rep.is_stc,
        is_tc=rep.is_tc,
        lacunar_colors=tuple(c for c in range(k) if vcount[c] == 0),
    )


def beta_gamma(mu: Coloring) -> tuple[int, int]:
    l = listing(mu)
    return (l.beta, l.gamma)


def format_listing(l: ClassListing, name: str) -> str:
    """Render per-color rows 'c(v+e=t)' and a summary with run compression."""
    rows = [
        f"{c}({l.vertex_counts[c]}+{l.edge_counts[c]}={l.totals[c]})"
        for c in range(len(l.totals))
    ]
    parts: list[str] = []
    i = 0
    totals = l.totals
    while i < len(totals):
        j = i
        while j < len(totals) and totals[j] == totals[i]:
            j += 1
        parts.append(f"{totals[i]}^{j - i}" if j - i > 1 else f"{totals[i]}")
        i = j
    summary = f"{name}({','.join(parts)})"
    return "\n".join(rows + [summary])


# -- pattern strings ----------------------------------------------------

_TOKEN_RE = re.compile(r"(\d+)_(\d+)")


def parse_pattern(text: str) -> tuple[tuple[int, int], ...]:
    """Expand a color-pattern string into (vertex color, edge color) tokens.

    Grammar: tokens ``V_E``, optionally grouped ``( ... )^k``; whitespace is
    insignificant.  Single-digit colors may be juxtaposed without spaces,
    which is how the catalog writes them, e.g. ``((0_21_02_1)^8)``.
    """
    pos = 0
    text = text.strip()

    def parse_seq(i: int, depth: int) -> tuple[list[tuple[int, int]], int]:
        out: list[tuple[int, int]] = []
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch == "(":
                inner, i = parse_seq(i + 1, depth + 1)
                if i >= len(text) or text[i] != ")":
                    raise ColoringError("unbalanced '(' in pattern")
                i += 1
                reps = 1
                if i < len(text) and text[i] == "^":
                    m = re.match(r"\^(\d+)", text[i:])
                    if not m:
                        raise ColoringError("'^' must be followed by a count")
                    reps = int(m.group(1))
                    i += m.end()
                out.extend(inner * reps)
            elif ch == ")":
                if depth == 0:
                    raise ColoringError("unbalanced ')' in pattern")
                return out, i
            else:
                m = _TOKEN_RE.match(text, i)
                if not m:
                    raise ColoringError(f"bad pattern token at {text[i:i + 8]!r}")
                v = int(m.group(1))
                run = m.group(2)
                # In unspaced runs like '0_21_0' only the first digit after
                # '_' is the edge color; a multi-digit edge color must be
                # followed by a separator to be read whole.
                end_of_run = m.end()
                sep_after = end_of_run >= len(text) or text[end_of_run] in " \t\n()^"
                if len(run) > 1 and not sep_after:
                    out.append((v, int(run[0])))
                    i = m.start(2) + 1
                else:
                    out.append((v, int(run)))
                    i = end_of_run
        return out, i

    tokens, end = parse_seq(pos, 0)
    if end != len(text):
        raise ColoringError("trailing characters in pattern")
    if not tokens:
        raise ColoringError("empty pattern")
    return tuple(tokens)


def apply_pattern(
    decomp: HamiltonDecomposition,
    pattern: str | Sequence[tuple[int, int]],
    chord_color: Optional[int] = None,
) -> Coloring:
    """Color the Hamilton cycle from pattern tokens and all chords uniformly.

    Token i gives the color of cycle vertex i and of the edge to cycle
    vertex i+1.  The result must be a valid STC; anything else is an error,
    so stored catalog patterns cannot silently drift.
    """
    g = decomp.graph
    tokens = parse_pattern(pattern) if isinstance(pattern, str) else tuple(pattern)
    if len(tokens) != len(decomp.cycle):
        raise ColoringError(
            f"pattern has {len(tokens)} tokens for a cycle of length {len(decomp.cycle)}"
        )
    if chord_color is None:
        chord_color = max_degree(g)
    vcol = [0] * g.n
    ecol = [0] * g.m
    for ci in decomp.chords:
        ecol[ci] = chord_color
    n = len(decomp.cycle)
    for i, (vc, ec) in enumerate(tokens):
        v = decomp.cycle[i]
        w = decomp.cycle[(i + 1) % n]
        vcol[v] = vc
        ecol[g.edge_index(v, w)] = ec
    mu = Coloring(g, tuple(vcol), tuple(ecol))
    rep = validate(mu)
    if not rep.is_stc:
        raise ColoringError(
            "pattern does not yield a valid STC "
            f"(edge conflicts {rep.edge_conflicts[:4]}, incidence {rep.incidence_conflicts[:4]})"
        )
    return mu


def greedy_stc(g: Graph) -> Coloring:
    """Some valid STC of any graph: a proper edge coloring with max degree
    + 1 colors found by backtracking (always exists), then every vertex
    takes the smallest color missing from its incident edges."""
    k = max_degree(g) + 1
    ecol = [-1] * g.m
    order = sorted(
        range(g.m), key=lambda ei: -(g.degree(g.edges[ei][0]) + g.degree(g.edges[ei][1]))
    )

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        ei = order[i]
        u, v = g.edges[ei]
        used = {ecol[ej] for x in (u, v) for ej in g.incident[x]}
        for c in range(k):
            if c not in used:
                ecol[ei] = c
                if rec(i + 1):
                    return True
                ecol[ei] = -1
        return False

    if not rec(0):
        raise ColoringError("edge coloring search failed")  # cannot happen for k = max degree + 1
    vcol = []
    for v in range(g.n):
        used = {ecol[ei] for ei in g.incident[v]}
        vcol.append(next(c for c in range(k) if c not in used))
    return Coloring(g, tuple(vcol), tuple(ecol))


def default_lacunar_stc(decomp: HamiltonDecomposition) -> Coloring:
    """Deterministic lacunar STC for a cubic graph with a Hamilton cycle.

    Cycle elements (v0, e01, v1, e12, ...) take color position mod 3 and
    chords take the spare color.  When 2n is not a multiple of 3 the wrap
    clashes; a seam repair then recolors at most 4 cycle elements nearest
    position 0, trying windows by size then proximity and color vectors in
    lexicographic order, keeping the first valid STC.
    """
    g = decomp.graph
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise ColoringError("default lacunar STC requires a cubic graph")
    chord_color = 3
    n = len(decomp.cycle)
    vcol = [0] * g.n
    ecol = [0] * g.m
    for ci in decomp.chords:
        ecol[ci] = chord_color
    positions: list[tuple[str, int]] = []
    for i in range(n):
        positions.append(("v", decomp.cycle[i]))
        positions.append(("e", g.edge_index(decomp.cycle[i], decomp.cycle[(i + 1) % n])))

    def paint(assign: dict[int, int]) -> Coloring:
        for p, (kind, idx) in enumerate(positions):
            c = assign.get(p, p % 3)
            if kind == "v":
                vcol[idx] = c
            else:
                ecol[idx] = c
        return Coloring(g, tuple(vcol), tuple(ecol))

    if (2 * n) % 3 == 0:
        mu = paint({})
        if not is_valid_stc(mu):
            raise ColoringError("mod-3 coloring unexpectedly invalid")
        return mu

    total = 2 * n
    for size in range(1, 5):
        windows = []
        for start_off in range(-4, 5 - size):
            offs = list(range(start_off, start_off + size))
            span = max(abs(o) for o in offs)
            windows.append((span, start_off, [o % total for o in offs]))
        for _, _, window in sorted(windows, key=lambda t: (t[0], t[1])):
            choices = [0] * size
            while True:
                assign = {w: choices[j] for j, w in enumerate(window)}
                mu = paint(assign)
                if is_valid_stc(mu):
                    return mu
                j = size - 1
                while j >= 0 and choices[j] == 2:
                    choices[j] = 0
                    j -= 1
                if j < 0:
                    break
                choices[j] += 1
    raise ColoringError(f"no seam repair within 4 elements found for n={n}")
