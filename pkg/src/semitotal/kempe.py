"""Two-color alternating paths, the swap move, and the reduction search.

A maximal color alternating path (MCAP) starts at a vertex colored c0,
follows edges colored alternately c1, c0, c1, ... and ends at a vertex
whose color matches the alternation (c0 after an odd number of edges, c1
after an even number).  In a valid STC the walk from a given start and
color pair is forced: a proper edge coloring leaves at most one extension
edge at every step, and the vertex-incidence condition makes a correctly
ending walk inextensible.  Exchanging c0 and c1 on the skeleton (the two
end vertices plus all edges) of such a path always yields another valid
STC; that exchange is the single primitive all reductions are built from.

A path of length one would be exactly an edge whose endpoints share a
color.  Those are handled by the separate flip move rather than treated
as MCAPs, so enumeration and flips partition the move set cleanly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import Coloring, beta_edges, beta_gamma, is_valid_stc, validate
from .graph import ElementRef, edge_ref, vertex_ref


class KempeError(ValueError):
    """Raised for stale paths, invalid inputs and malformed moves."""


@dataclass(frozen=True)
class Mcap:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    c0: int
    c1: int

    @property
    def k(self) -> int:
        return len(self.edges)

    @property
    def skeleton(self) -> tuple[ElementRef, ...]:
        refs = [vertex_ref(self.vertices[0])]
        refs += [edge_ref(e) for e in self.edges]
        refs.append(vertex_ref(self.vertices[-1]))
        return tuple(refs)

    def skeleton_colors(self, mu: Coloring) -> tuple[int, ...]:
        out = [mu.vertex_colors[self.vertices[0]]]
        out += [mu.edge_colors[e] for e in self.edges]
        out.append(mu.vertex_colors[self.vertices[-1]])
        return tuple(out)

    def reversed(self) -> "Mcap":
        if self.k % 2 == 1:
            c0, c1 = self.c0, self.c1
        else:
            c0, c1 = self.c1, self.c0
        return Mcap(tuple(reversed(self.vertices)), tuple(reversed(self.edges)), c0, c1)

    def canonical(self) -> "Mcap":
        return self if self.vertices[0] <= self.vertices[-1] else self.reversed()

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": list(self.edges),
            "colors": [self.c0, self.c1],
            "path": [r.to_json() for r in self.skeleton],
        }

    @staticmethod
    def from_json(obj: dict) -> "Mcap":
        c0, c1 = obj["colors"]
        return Mcap(tuple(obj["vertices"]), tuple(obj["edges"]), c0, c1)


def _check_stc(mu: Coloring, who: str) -> None:
    if not is_valid_stc(mu):
        raise KempeError(f"{who} requires a valid STC input")


def trace_alternating(
    mu: Coloring, v0: int, c0: int, c1: int, _checked: bool = False
) -> Optional[Mcap]:
    """Follow the unique maximal alternating walk from v0.

    Returns the MCAP when the walk ends at a vertex satisfying the terminal
    condition with all vertices distinct, and None otherwise.  A would-be
    revisit also returns None; with a proper edge coloring it cannot occur,
    but the guard stays as a cheap safety net.
    """
    if c0 == c1:
        raise KempeError("the two path colors must differ")
    if not _checked:
        _check_stc(mu, "trace_alternating")
    g = mu.graph
    if mu.vertex_colors[v0] != c0:
        raise KempeError(f"vertex {v0} is not colored {c0}")
    verts = [v0]
    edges: list[int] = []
    seen = {v0}
    current = v0
    want = c1
    while True:
        nxt_edge = None
        for w, ei in zip(g.adjacency[current], g.incident[current]):
            if mu.edge_colors[ei] == want and (not edges or ei != edges[-1]):
                if nxt_edge is not None:
                    raise KempeError("edge coloring is not proper at vertex %d" % current)
                nxt_edge = (w, ei)
        if nxt_edge is None:
            break
        w, ei = nxt_edge
        if w in seen:
            return None
        verts.append(w)
        edges.append(ei)
        seen.add(w)
        current = w
        want = c0 if want == c1 else c1
        # the walk must stop where the vertex color equals the next edge
        # color wanted: the incidence condition forbids such an edge
        if mu.vertex_colors[current] == want:
            break
    if not edges:
        return None
    k = len(edges)
    terminal = c0 if k % 2 == 1 else c1
    if mu.vertex_colors[verts[-1]] != terminal:
        return None
    return Mcap(tuple(verts), tuple(edges), c0, c1)


def enumerate_mcaps(
    mu: Coloring, pair: Optional[tuple[int, int]] = None
) -> list[Mcap]:
    """All MCAPs of length >= 2, deduplicated under traversal reversal.

    Length-1 alternating paths coincide with the flip move on an edge whose
    endpoints share a color and are deliberately not listed here.  Order is
    deterministic: by start vertex, then c0, then c1 of the canonical
    representative.
    """
    _check_stc(mu, "enumerate_mcaps")
    k = mu.palette
    if pair is not None:
        c0, c1 = pair
        if c0 == c1:
            raise KempeError("the two path colors must differ")
        pairs = [(c0, c1)]
    else:
        pairs = [(a, b) for a in range(k) for b in range(k) if a != b]
    found: dict[tuple, Mcap] = {}
    for c0, c1 in pairs:
        for v0 in range(mu.graph.n):
            if mu.vertex_colors[v0] != c0:
                continue
            path = trace_alternating(mu, v0, c0, c1, _checked=True)
            if path is None or path.k < 2:
                continue
            canon = path.canonical()
            ident = (canon.vertices, canon.edges, canon.c0, canon.c1)
            found.setdefault(ident, canon)
    if pair is not None:
        # keep only paths matching the requested orientation of the pair
        out = [
            p
            for p in found.values()
            if (p.c0, p.c1) == pair or (p.k % 2 == 0 and (p.c1, p.c0) == pair)
        ]
    else:
        out = list(found.values())
    out.sort(key=lambda p: (p.vertices[0], p.c0, p.c1, p.vertices))
    return out


def _verify_path_against(mu: Coloring, path: Mcap) -> None:
    g = mu.graph
    if len(path.vertices) != path.k + 1 or path.k < 1:
        raise KempeError("malformed path")
    if mu.vertex_colors[path.vertices[0]] != path.c0:
        raise KempeError("path start color does not match the coloring")
    for i, ei in enumerate(path.edges):
        u, v = path.vertices[i], path.vertices[i + 1]
        a, b = g.edges[ei]
        if {a, b} != {u, v}:
            raise KempeError(f"edge {ei} does not join path vertices {u},{v}")
        want = path.c1 if i % 2 == 0 else path.c0
        if mu.edge_colors[ei] != want:
            raise KempeError("path colors are stale for this coloring")
    terminal = path.c0 if path.k % 2 == 1 else path.c1
    if mu.vertex_colors[path.vertices[-1]] != terminal:
        raise KempeError("path terminal vertex color is stale")


def swap(mu: Coloring, path: Mcap, _checked: bool = False) -> Coloring:
    """Exchange c0 and c1 on the skeleton of an alternating path.

    The input path is re-verified against the coloring, and the output is
    re-validated: a failure there means the path was malformed, not a
    tolerated outcome.
    """
    if not _checked:
        _check_stc(mu, "swap")
    _verify_path_against(mu, path)
    c0, c1 = path.c0, path.c1
    flip = {c0: c1, c1: c0}
    vcol = list(mu.vertex_colors)
    ecol = list(mu.edge_colors)
    vcol[path.vertices[0]] = flip[vcol[path.vertices[0]]]
    vcol[path.vertices[-1]] = flip[vcol[path.vertices[-1]]]
    for ei in path.edges:
        ecol[ei] = flip[ecol[ei]]
    out = Coloring(mu.graph, tuple(vcol), tuple(ecol))
    if not is_valid_stc(out):
        raise KempeError("swap produced an invalid STC; the path was malformed")
    if out.key() == mu.key():
        raise KempeError("swap changed nothing; the path was malformed")
    return out


def flip_beta_edge(mu: Coloring, ei: int, _checked: bool = False) -> Coloring:
    """Recolor an edge whose endpoints share a color.

    Endpoints take the edge's color and the edge takes theirs.  Properness
    of the edge coloring at both endpoints guarantees validity; the result
    may contain a new same-colored adjacent pair, which is recomputed by
    callers rather than assumed away.
    """
    if not _checked:
        _check_stc(mu, "flip_beta_edge")
    g = mu.graph
    u, v = g.edges[ei]
    c0 = mu.vertex_colors[u]
    if mu.vertex_colors[v] != c0:
        raise KempeError(f"edge {ei} is not a beta-edge")
    c1 = mu.edge_colors[ei]
    vcol = list(mu.vertex_colors)
    ecol = list(mu.edge_colors)
    vcol[u] = c1
    vcol[v] = c1
    ecol[ei] = c0
    out = Coloring(mu.graph, tuple(vcol), tuple(ecol))
    if not is_valid_stc(out):
        raise KempeError("flip produced an invalid STC")
    return out


# -- step classification -------------------------------------------------


@dataclass(frozen=True)
class StepClass:
    beta: Optional[str]   # None | "partial" | "total"
    gamma: Optional[str]

    @property
    def label(self) -> str:
        if self.beta and self.gamma:
            scope = "total" if (self.beta, self.gamma) == ("total", "total") else "partial"
            return f"{scope} β-γ-reduction"
        if self.beta:
            return f"{self.beta} β-reduction"
        if self.gamma:
            return f"{self.gamma} γ-reduction"
        return "neutral"

    def to_json(self) -> dict:
        return {"beta": self.beta, "gamma": self.gamma, "label": self.label}


def classify_step(before: Coloring, after: Coloring) -> StepClass:
    """Classify a move by how beta and gamma actually changed.

    A drop in beta is a beta-reduction, total when beta reaches 0; a drop
    in gamma is a gamma-reduction, total when gamma reaches <= 1.  The
    classification is always recomputed from the two colorings.
    """
    if before.graph.edges != after.graph.edges or before.graph.n != after.graph.n:
        raise KempeError("classify_step needs colorings of the same graph")
    b0, g0 = beta_gamma(before)
    b1, g1 = beta_gamma(after)
    beta = None
    if b1 < b0:
        beta = "total" if b1 == 0 else "partial"
    gamma = None
    if g1 < g0:
        gamma = "total" if g1 <= 1 else "partial"
    return StepClass(beta, gamma)


# -- reduction traces ------------------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "swap" | "flip"
    path: Optional[Mcap]
    edge: Optional[int]
    colors: tuple[int, int]
    before: tuple[int, int]
    after: tuple[int, int]
    classification: StepClass

    def to_json(self) -> dict:
        if self.kind == "swap":
            refs = [r.to_json() for r in self.path.skeleton]
        else:
            refs = [["e", self.edge]]
        return {
            "kind": self.kind,
            "path": refs,
            "colors": list(self.colors),
            "before": list(self.before),
            "after": list(self.after),
            "class": self.classification.label,
        }


@dataclass(frozen=True)
class ReductionTrace:
    initial: Coloring
    steps: tuple[ReductionStep, ...]
    final: Coloring
    goal: str
    goal_reached: bool
    nodes_expanded: int = 0

    def replay(self) -> Coloring:
        mu = self.initial
        for step in self.steps:
            if step.kind == "swap":
                mu = swap(mu, step.path)
            else:
                mu = flip_beta_edge(mu, step.edge)
        return mu

    def to_json(self, graph_name: Optional[str] = None) -> dict:
        return {
            "goal": self.goal,
            "goal_reached": self.goal_reached,
            "initial": self.initial.to_json(graph_name),
            "steps": [s.to_json() for s in self.steps],
            "final": self.final.to_json(graph_name),
            "nodes_expanded": self.nodes_expanded,
        }


def apply_move(mu: Coloring, move: tuple) -> Coloring:
    kind, payload = move
    if kind == "swap":
        return swap(mu, payload, _checked=True)
    return flip_beta_edge(mu, payload, _checked=True)


def _moves(mu: Coloring) -> list[tuple]:
    out: list[tuple] = [("flip", ei) for ei in beta_edges(mu)]
    out += [("swap", p) for p in enumerate_mcaps(mu)]
    return out


def _step_from_move(mu: Coloring, move: tuple, nu: Coloring) -> ReductionStep:
    kind, payload = move
    before = beta_gamma(mu)
    after = beta_gamma(nu)
    if kind == "swap":
        return ReductionStep(
            "swap", payload, None, (payload.c0, payload.c1), before, after,
            classify_step(mu, nu),
        )
    u, v = mu.graph.edges[payload]
    colors = (mu.vertex_colors[u], mu.edge_colors[payload])
    return ReductionStep("flip", None, payload, colors, before, after, classify_step(mu, nu))


def trace_from_moves(
    mu: Coloring, moves: Sequence[tuple], goal: str = "replay"
) -> ReductionTrace:
    """Build a trace by applying an explicit move sequence.

    Moves are ("swap", Mcap) or ("flip", edge_index); classifications and
    before/after pairs are recomputed, never trusted.
    """
    steps = []
    cur = mu
    for move in moves:
        nxt = apply_move(cur, move)
        steps.append(_step_from_move(cur, move, nxt))
        cur = nxt
    return ReductionTrace(mu, tuple(steps), cur, goal, True, 0)


def mcap_from_vertices(
    mu: Coloring, vertices: Sequence[int], c0: int, c1: int
) -> Mcap:
    """Reconstruct an alternating path from its vertex sequence."""
    g = mu.graph
    edges = tuple(
        g.edge_index(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)
    )
    path = Mcap(tuple(vertices), edges, c0, c1)
    _verify_path_against(mu, path)
    return path


GOALS = ("tc", "equitable_tc", "equitable_stc", "min_beta_gamma")


@dataclass
class Budget:
    nodes: int = 100_000
    steps: Optional[int] = None


def reduce(
    mu: Coloring,
    goal: str = "equitable_tc",
    budget: Optional[Budget] = None,
    seed: int = 0,
) -> ReductionTrace:
    """Best-first search over colorings using swaps and flips as moves.

    The score is lexicographic (beta, gamma) for the tc goals and
    (gamma, beta) for equitable_stc; min_beta_gamma scores like the tc
    goals and simply keeps the best state found.  Only strictly
    score-improving children are expanded, which makes every reported
    trace strictly decreasing step over step and bounds the search depth.
    The goal may be unreached within budget; that is reported in the trace
    flags, never raised.  The search is deterministic: ties break on the
    coloring key, and the seed is recorded for interface stability only.
    """
    del seed
    if goal not in GOALS:
        raise KempeError(f"unknown goal {goal!r}")
    _check_stc(mu, "reduce")
    budget = budget or Budget()

    if goal in ("tc", "equitable_tc", "min_beta_gamma"):
        def score(m: Coloring) -> tuple[int, int]:
            return beta_gamma(m)
    else:
        def score(m: Coloring) -> tuple[int, int]:
            b, g = beta_gamma(m)
            return (g, b)

    def reached(m: Coloring) -> bool:
        b, g = beta_gamma(m)
        if goal == "tc":
            return b == 0
        if goal == "equitable_tc":
            return b == 0 and g <= 1
        if goal == "equitable_stc":
            return g <= 1
        return False

    start_key = mu.key()
    parents: dict[tuple, tuple[tuple, tuple]] = {}
    colorings: dict[tuple, Coloring] = {start_key: mu}
    depth: dict[tuple, int] = {start_key: 0}

    def build_trace(key: tuple, flag: bool, nodes: int) -> ReductionTrace:
        chain: list[tuple[tuple, tuple]] = []
        k = key
        while k != start_key:
            pk, move = parents[k]
            chain.append((pk, move))
            k = pk
        chain.reverse()
        steps = []
        cur = mu
        for _, move in chain:
            nxt = apply_move(cur, move)
            steps.append(_step_from_move(cur, move, nxt))
            cur = nxt
        return ReductionTrace(mu, tuple(steps), cur, goal, flag, nodes)

    if reached(mu):
        return build_trace(start_key, True, 0)

    heap: list[tuple[tuple[int, int], tuple]] = [(score(mu), start_key)]
    best_key, best_score = start_key, score(mu)
    expanded = 0
    exhausted = False
    while heap:
        if expanded >= budget.nodes:
            break
        s, key = heapq.heappop(heap)
        cur = colorings[key]
        if s != score(cur):
            continue
        expanded += 1
        if budget.steps is not None and depth[key] >= budget.steps:
            continue
        for move in _moves(cur):
            child = apply_move(cur, move)
            ck = child.key()
            cs = score(child)
            if cs >= s:
                continue
            if ck in colorings:
                continue
            colorings[ck] = child
            parents[ck] = (key, move)
            depth[ck] = depth[key] + 1
            if cs < best_score:
                best_key, best_score = ck, cs
            if reached(child):
                return build_trace(ck, True, expanded)
            heapq.heappush(heap, (cs, ck))
    else:
        exhausted = True
    flag = exhausted if goal == "min_beta_gamma" else reached(colorings[best_key])
    return build_trace(best_key, flag, expanded)
