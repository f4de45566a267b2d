"""Immutable simple undirected graphs with canonical edge indexing.

Every other module references edges by their index in the lexicographically
sorted edge list, so the index assignment here is the single source of truth
for serialization, colorings and traces.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from math import inf
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graphs, cycles or element references."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: Optional[str] = None
    # derived, filled in __post_init__
    adjacency: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)
    incident: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(idx)
            inc[v].append(idx)
        order = [sorted(range(len(adj[v])), key=lambda i: adj[v][i]) for v in range(self.n)]
        object.__setattr__(
            self, "adjacency", tuple(tuple(adj[v][i] for i in order[v]) for v in range(self.n))
        )
        object.__setattr__(
            self, "incident", tuple(tuple(inc[v][i] for i in order[v]) for v in range(self.n))
        )

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def element_count(self) -> int:
        return self.n + len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        idx = self._edge_lookup.get((u, v))
        if idx is None:
            raise GraphError(f"no edge ({u},{v}) in graph")
        return idx

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_lookup

    @property
    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        lookup = self.__dict__.get("_lookup_cache")
        if lookup is None:
            lookup = {e: i for i, e in enumerate(self.edges)}
            self.__dict__["_lookup_cache"] = lookup
        return lookup

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def to_json(self) -> dict:
        obj: dict = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.name is not None:
            obj["name"] = self.name
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json(obj: dict) -> "Graph":
        return build_graph(obj["n"], [tuple(e) for e in obj["edges"]], name=obj.get("name"))


# -- element references -----------------------------------------------


@dataclass(frozen=True, order=True)
class ElementRef:
    """A vertex or an edge of a graph; ``kind`` is 'v' or 'e'."""

    kind: str
    index: int

    def to_json(self) -> list:
        return [self.kind, self.index]

    @staticmethod
    def from_json(obj: Sequence) -> "ElementRef":
        kind, index = obj
        if kind not in ("v", "e"):
            raise GraphError(f"bad element kind {kind!r}")
        return ElementRef(kind, int(index))


def vertex_ref(i: int) -> ElementRef:
    return ElementRef("v", i)


def edge_ref(i: int) -> ElementRef:
    return ElementRef("e", i)


# -- construction ------------------------------------------------------


def build_graph(n: int, edge_list: Iterable[tuple[int, int]], name: Optional[str] = None) -> Graph:
    """Canonicalize an edge list into a Graph.

    Rejects loops, duplicate edges and out-of-range endpoints.  Edges are
    stored sorted lexicographically with u < v; their position in that
    order is the canonical edge index.
    """
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for u, v in list(edge_list):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        canon.append(e)
    canon.sort()
    return Graph(n=n, edges=tuple(canon), name=name)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or math.inf for forests.

    For each edge, measures the shortest alternative path between its
    endpoints by BFS with that edge removed; the minimum over edges plus
    one is the girth.  Fine for the catalog sizes (n <= 102).
    """
    best = inf
    for idx, (u, v) in enumerate(g.edges):
        dist = _bfs_dist_avoiding(g, u, v, idx)
        if dist is not None:
            best = min(best, dist + 1)
    return best


def _bfs_dist_avoiding(g: Graph, src: int, dst: int, banned_edge: int) -> Optional[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for w, ei in zip(g.adjacency[x], g.incident[x]):
            if ei == banned_edge or dist[w] >= 0:
                continue
            dist[w] = dist[x] + 1
            if w == dst:
                return dist[w]
            queue.append(w)
    return None


def distances_from(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


# -- Hamilton decompositions ------------------------------------------


@dataclass(frozen=True)
class HamiltonDecomposition:
    graph: Graph
    cycle: tuple[int, ...]
    chords: tuple[int, ...]  # edge indices not on the cycle

    @property
    def cycle_edges(self) -> tuple[int, ...]:
        g = self.graph
        n = len(self.cycle)
        return tuple(
            g.edge_index(self.cycle[i], self.cycle[(i + 1) % n]) for i in range(n)
        )


def verify_hamilton(g: Graph, cycle: Sequence[int]) -> HamiltonDecomposition:
    """Validate a Hamilton cycle and split the edge set into cycle + chords.

    For cubic graphs the chords must form a perfect matching (the
    complementary 1-factor); that is asserted here rather than assumed.
    """
    if len(cycle) != g.n:
        raise GraphError(f"cycle length {len(cycle)} != vertex count {g.n}")
    if len(set(cycle)) != g.n:
        raise GraphError("cycle repeats a vertex")
    cyc_edges = set()
    for i in range(g.n):
        u, v = cycle[i], cycle[(i + 1) % g.n]
        if not g.has_edge(u, v):
            raise GraphError(f"consecutive cycle vertices {u},{v} are not adjacent")
        cyc_edges.add(g.edge_index(u, v))
    chords = tuple(i for i in range(g.m) if i not in cyc_edges)
    if g.n > 0 and all(g.degree(v) == 3 for v in range(g.n)):
        covered: set[int] = set()
        for ci in chords:
            u, v = g.edges[ci]
            if u in covered or v in covered:
                raise GraphError("chords of a cubic graph must form a perfect matching")
            covered.update((u, v))
        if len(covered) != g.n:
            raise GraphError("chords of a cubic graph must form a perfect matching")
    return HamiltonDecomposition(graph=g, cycle=tuple(cycle), chords=chords)


# -- spanning subgraph components --------------------------------------


def subgraph_components(g: Graph, edge_subset: Iterable[int]) -> list[tuple[Graph, list[int]]]:
    """Connected components of the spanning subgraph on the given edge indices.

    Isolated vertices are dropped.  Each component comes with the list of
    original vertex ids, ordered by the component-local numbering.
    """
    subset = sorted(set(edge_subset))
    for ei in subset:
        if not (0 <= ei < g.m):
            raise GraphError(f"unknown edge index {ei}")
    adj: dict[int, list[tuple[int, int]]] = {}
    for ei in subset:
        u, v = g.edges[ei]
        adj.setdefault(u, []).append((v, ei))
        adj.setdefault(v, []).append((u, ei))
    seen: set[int] = set()
    components: list[tuple[Graph, list[int]]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        verts: list[int] = []
        queue = deque([start])
        seen.add(start)
        comp_edges: set[int] = set()
        while queue:
            x = queue.popleft()
            verts.append(x)
            for w, ei in adj[x]:
                comp_edges.add(ei)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        verts.sort()
        local = {v: i for i, v in enumerate(verts)}
        edges = [(local[g.edges[ei][0]], local[g.edges[ei][1]]) for ei in sorted(comp_edges)]
        components.append((build_graph(len(verts), edges), verts))
    return components
