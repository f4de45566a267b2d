"""Perfect codes, total perfect codes, and coloring classifications built
on them.

A perfect code (efficient dominating set) is an independent set S with
every outside vertex having exactly one neighbor in S; we require
independence explicitly, which the worked examples all satisfy.  A total
perfect code drops independence and counts members too: every vertex of
the graph has exactly one neighbor in S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .coloring import Coloring, beta_edges, listing, validate
from .graph import Graph


class CodesError(ValueError):
    """Raised when a classification is asked of an unsuitable coloring."""


def is_perfect_code(g: Graph, s: Iterable[int]) -> bool:
    sset = set(s)
    for v in sset:
        if any(w in sset for w in g.adjacency[v]):
            return False
    for v in range(g.n):
        if v in sset:
            continue
        if sum(1 for w in g.adjacency[v] if w in sset) != 1:
            return False
    return True


def is_total_perfect_code(g: Graph, s: Iterable[int]) -> bool:
    sset = set(s)
    for v in range(g.n):
        if sum(1 for w in g.adjacency[v] if w in sset) != 1:
            return False
    return True


def find_perfect_codes(g: Graph, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """Exhaustive perfect-code search, a test utility for graphs up to ~40
    vertices.  Backtracks over vertices in id order with domination counts."""
    if g.n > 40:
        raise CodesError("exhaustive code search is limited to 40 vertices")
    results: list[tuple[int, ...]] = []
    chosen: list[int] = []
    dominated = [0] * g.n  # neighbors already inside the code

    def place(v: int) -> None:
        if limit is not None and len(results) >= limit:
            return
        if v == g.n:
            if all((i in chosen_set) or dominated[i] == 1 for i in range(g.n)):
                results.append(tuple(chosen))
            return
        # option 1: leave v out, feasible while it can still be dominated
        if dominated[v] == 1 or any(w > v or w in chosen_set for w in g.adjacency[v]):
            place_out(v)
        # option 2: put v in, if independent and no neighbor over-dominated
        if dominated[v] == 0 and all(w not in chosen_set for w in g.adjacency[v]):
            if all(dominated[w] == 0 for w in g.adjacency[v]):
                chosen.append(v)
                chosen_set.add(v)
                for w in g.adjacency[v]:
                    dominated[w] += 1
                place(v + 1)
                for w in g.adjacency[v]:
                    dominated[w] -= 1
                chosen_set.discard(v)
                chosen.pop()

    def place_out(v: int) -> None:
        place(v + 1)

    chosen_set: set[int] = set()
    place(0)
    return results


# -- coloring classifications --------------------------------------------


@dataclass(frozen=True)
class CodeReport:
    vertex_classes: tuple[tuple[int, ...], ...]
    perfect_code_flags: tuple[bool, ...]
    total_perfect_code_flags: tuple[bool, ...]
    efficient_tc: Optional[bool]
    total_perfect_rank: Optional[int]

    def to_json(self) -> dict:
        return {
            "vertex_classes": [list(s) for s in self.vertex_classes],
            "perfect_code_flags": list(self.perfect_code_flags),
            "total_perfect_code_flags": list(self.total_perfect_code_flags),
            "efficient_tc": self.efficient_tc,
            "total_perfect_rank": self.total_perfect_rank,
        }


def vertex_classes(mu: Coloring) -> tuple[tuple[int, ...], ...]:
    k = mu.palette
    out: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(mu.vertex_colors):
        out[c].append(v)
    return tuple(tuple(s) for s in out)


def is_efficient_tc(mu: Coloring) -> bool:
    """True when a valid TC's color classes all have perfect-code vertex sets."""
    rep = validate(mu)
    if not rep.is_tc:
        raise CodesError("efficiency is defined for valid TCs")
    return all(is_perfect_code(mu.graph, s) for s in vertex_classes(mu))


def classify_stc(mu: Coloring) -> int:
    """Rank a lacunar STC of a cubic graph by its total-perfect structure.

    Rank 3: the three nonempty classes' vertex sets are all total perfect
    codes consisting of endpoints of same-colored-pair edges; rank 1: exactly
    one such class; rank 0 otherwise.
    """
    g = mu.graph
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise CodesError("classification applies to cubic graphs")
    rep = validate(mu)
    if not rep.is_stc:
        raise CodesError("classification applies to valid STCs")
    l = listing(mu)
    if not l.lacunar_colors:
        raise CodesError("classification applies to lacunar STCs")
    endpoints: set[int] = set()
    for ei in beta_edges(mu):
        u, v = g.edges[ei]
        endpoints.update((u, v))
    qualifying = 0
    nonempty = 0
    for s in vertex_classes(mu):
        if not s:
            continue
        nonempty += 1
        if set(s) <= endpoints and is_total_perfect_code(g, s):
            qualifying += 1
    if qualifying == nonempty == 3:
        return 3
    if qualifying == 1:
        return 1
    return 0


def code_report(mu: Coloring) -> CodeReport:
    classes = vertex_classes(mu)
    g = mu.graph
    rep = validate(mu)
    eff = None
    if rep.is_tc:
        eff = all(is_perfect_code(g, s) for s in classes)
    rank = None
    if rep.is_stc and listing(mu).lacunar_colors and all(
        g.degree(v) == 3 for v in range(g.n)
    ):
        rank = classify_stc(mu)
    return CodeReport(
        vertex_classes=classes,
        perfect_code_flags=tuple(is_perfect_code(g, s) for s in classes),
        total_perfect_code_flags=tuple(is_total_perfect_code(g, s) for s in classes),
        efficient_tc=eff,
        total_perfect_rank=rank,
    )


def edge_orthogonal(mu1: Coloring, mu2: Coloring) -> bool:
    """Same vertex coloring, no edge sharing a color between the two.

    The underlying notion comes from a companion construction we only need
    as a pairwise predicate; this reading matches the worked example of two
    total colorings agreeing on vertices and disagreeing on every edge.
    """
    if mu1.graph.edges != mu2.graph.edges or mu1.graph.n != mu2.graph.n:
        raise CodesError("orthogonality needs colorings of the same graph")
    if mu1.palette != mu2.palette:
        raise CodesError("orthogonality needs a shared palette")
    if mu1.vertex_colors != mu2.vertex_colors:
        return False
    return all(a != b for a, b in zip(mu1.edge_colors, mu2.edge_colors))
