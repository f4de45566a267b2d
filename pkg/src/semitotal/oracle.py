"""Exact ground truth on small instances by pruned exhaustive search.

Elements are ordered by a BFS from a highest-degree vertex, interleaving
each vertex with its already-seen incident edges so constraints bind as
early as possible.  Color symmetry is broken by capping every element's
color at one above the largest color used so far, which is sound for
existence questions and for minimizing the permutation-invariant beta and
gamma.  Results above the element cap are reported as cap-hit with no
value, never guessed.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, max_degree

DEFAULT_CAP = 26


@dataclass(frozen=True)
class OracleResult:
    value: Optional[int]
    elements: int
    nodes: int
    cap_hit: bool
    status: str  # "ok" | "cap" | "no-tc"

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "elements": self.elements,
            "nodes": self.nodes,
            "cap_hit": self.cap_hit,
            "status": self.status,
        }


@dataclass(frozen=True)
class ClosedForm:
    type1: bool
    beta: int

    @property
    def graph_type(self) -> int:
        return 1 if self.type1 else 2


def closed_form(family: str, n: int) -> ClosedForm:
    """Known type and minimum-beta values for cycles and complete graphs."""
    if family == "cycle":
        if n < 3:
            raise GraphError("cycles need n >= 3")
        type1 = n % 3 == 0
        return ClosedForm(type1, 0 if type1 else 2)
    if family == "complete":
        if n < 2:
            raise GraphError("complete graphs need n >= 2")
        type1 = n % 2 == 1
        return ClosedForm(type1, 0 if type1 else n // 2)
    raise GraphError(f"no closed form for family {family!r}")


def cycle_graph(n: int) -> Graph:
    from .graph import build_graph

    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_graph(n: int) -> Graph:
    from .graph import build_graph

    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}"
    )


# -- element ordering and constraint tables -----------------------------


def _element_order(g: Graph) -> list[tuple[str, int]]:
    from collections import deque

    start = max(range(g.n), key=g.degree) if g.n else 0
    seen_v = [False] * g.n
    placed_v = [False] * g.n
    order: list[tuple[str, int]] = []
    queue = deque([start])
    seen_v[start] = True
    while queue:
        v = queue.popleft()
        placed_v[v] = True
        order.append(("v", v))
        for w, ei in zip(g.adjacency[v], g.incident[v]):
            if placed_v[w]:  # edge enters the order with its second endpoint
                order.append(("e", ei))
        for w in g.adjacency[v]:
            if not seen_v[w]:
                seen_v[w] = True
                queue.append(w)
    if not all(seen_v):
        raise GraphError("oracle requires a connected graph")
    return order


class _Search:
    """Backtracking over elements with forward checking.

    Variables are vertices (in BFS order) followed by edges (in order of
    appearance during the same BFS).  Selection is most-constrained-first
    with a bias toward vertices, which surfaces beta and gamma costs early;
    assignments prune the domains of conflicting unassigned elements and
    fail as soon as one empties.
    """

    def __init__(self, g: Graph, k: int, tc: bool):
        self.g = g
        self.k = k
        walk = _element_order(g)
        self.order = [el for el in walk if el[0] == "v"] + [el for el in walk if el[0] == "e"]
        pos = {el: i for i, el in enumerate(self.order)}
        n_el = len(self.order)
        conflicts: list[set[int]] = [set() for _ in range(n_el)]
        for i, (kind, idx) in enumerate(self.order):
            if kind == "v":
                for w, ei in zip(g.adjacency[idx], g.incident[idx]):
                    conflicts[i].add(pos[("e", ei)])
                    if tc:
                        conflicts[i].add(pos[("v", w)])
            else:
                u, v = g.edges[idx]
                for x in (u, v):
                    conflicts[i].add(pos[("v", x)])
                    for ei2 in g.incident[x]:
                        if ei2 != idx:
                            conflicts[i].add(pos[("e", ei2)])
        for i, cs in enumerate(conflicts):
            for j in cs:
                conflicts[j].add(i)
        self.conflicts = [sorted(c) for c in conflicts]
        self.is_edge = [el[0] == "e" for el in self.order]
        # vertex adjacency in element positions, for beta counting
        self.adj_pos: list[list[int]] = [[] for _ in range(n_el)]
        for i, (kind, idx) in enumerate(self.order):
            if kind == "v":
                self.adj_pos[i] = [pos[("v", w)] for w in g.adjacency[idx]]
        self.colors = [-1] * n_el
        self.full = (1 << k) - 1
        self.nodes = 0

    # -- generic DFS skeleton; hooks differ per objective ----------------

    def _select(self, domains: list[int]) -> int:
        best = -1
        best_key = None
        for i in range(len(self.order)):
            if self.colors[i] >= 0:
                continue
            key = (bin(domains[i]).count("1"), self.is_edge[i], i)
            if best_key is None or key < best_key:
                best_key = key
                best = i
        return best

    def _assign(self, i: int, c: int, domains: list[int]) -> Optional[list[int]]:
        """Forward-check an assignment; returns an undo list or None."""
        undo = []
        bit = 1 << c
        for j in self.conflicts[i]:
            if self.colors[j] < 0 and domains[j] & bit:
                domains[j] &= ~bit
                undo.append(j)
                if domains[j] == 0:
                    for u in undo:
                        domains[u] |= bit
                    return None
        self.colors[i] = c
        return undo

    def _unassign(self, i: int, c: int, domains: list[int], undo: list[int]) -> None:
        bit = 1 << c
        for u in undo:
            domains[u] |= bit
        self.colors[i] = -1

    def run_exists(self) -> bool:
        domains = [self.full] * len(self.order)
        return self._exists(domains, 0, len(self.order))

    def _exists(self, domains: list[int], used: int, left: int) -> bool:
        if left == 0:
            return True
        i = self._select(domains)
        allowed = domains[i] & ((1 << min(used + 1, self.k)) - 1)
        c = 0
        while allowed:
            if allowed & 1:
                self.nodes += 1
                undo = self._assign(i, c, domains)
                if undo is not None:
                    if self._exists(domains, max(used, c + 1), left - 1):
                        return True
                    self._unassign(i, c, domains, undo)
            allowed >>= 1
            c += 1
        return False

    def run_min_beta(self) -> Optional[int]:
        self.best: Optional[int] = None
        domains = [self.full] * len(self.order)
        self._beta(domains, 0, len(self.order), 0)
        return self.best

    def _beta(self, domains: list[int], used: int, left: int, beta: int) -> None:
        if self.best is not None and beta >= self.best:
            return
        if left == 0:
            self.best = beta
            return
        i = self._select(domains)
        allowed = domains[i] & ((1 << min(used + 1, self.k)) - 1)
        c = 0
        while allowed:
            if allowed & 1:
                self.nodes += 1
                extra = 0
                if not self.is_edge[i]:
                    extra = sum(1 for j in self.adj_pos[i] if self.colors[j] == c)
                if self.best is None or beta + extra < self.best:
                    undo = self._assign(i, c, domains)
                    if undo is not None:
                        self._beta(domains, max(used, c + 1), left - 1, beta + extra)
                        self._unassign(i, c, domains, undo)
            allowed >>= 1
            c += 1

    def run_min_gamma(self) -> Optional[int]:
        self.best = None
        self.counts = [0] * self.k
        domains = [self.full] * len(self.order)
        self._gamma(domains, 0, len(self.order))
        return self.best

    def _gamma(self, domains: list[int], used: int, left: int) -> None:
        if self.best == 0:
            return
        counts = self.counts
        hi = max(counts)
        if self.best is not None:
            # beating best requires every class to reach hi - best + 1;
            # prune when the remaining elements cannot supply that
            floor = hi - self.best + 1
            needed = sum(max(0, floor - c) for c in counts)
            if needed > left:
                return
        if left == 0:
            gamma = hi - min(counts)
            if self.best is None or gamma < self.best:
                self.best = gamma
            return
        i = self._select(domains)
        allowed = domains[i] & ((1 << min(used + 1, self.k)) - 1)
        c = 0
        while allowed:
            if allowed & 1:
                self.nodes += 1
                undo = self._assign(i, c, domains)
                if undo is not None:
                    counts[c] += 1
                    self._gamma(domains, max(used, c + 1), left - 1)
                    counts[c] -= 1
                    self._unassign(i, c, domains, undo)
            allowed >>= 1
            c += 1


def exact_total_chromatic(
    g: Graph, cap: int = DEFAULT_CAP, cache: Optional["OracleCache"] = None
) -> OracleResult:
    """Least k admitting a total coloring, by backtracking."""
    elements = g.element_count
    if elements > cap:
        return OracleResult(None, elements, 0, True, "cap")
    if cache is not None:
        hit = cache.get(g, "chi2", {})
        if hit is not None:
            return hit
    nodes = 0
    value = None
    for k in range(max_degree(g) + 1, elements + 2):
        s = _Search(g, k, tc=True)
        ok = s.run_exists()
        nodes += s.nodes
        if ok:
            value = k
            break
    res = OracleResult(value, elements, nodes, False, "ok")
    if cache is not None:
        cache.put(g, "chi2", {}, res)
    return res


def min_beta(
    g: Graph, cap: int = DEFAULT_CAP, cache: Optional["OracleCache"] = None
) -> OracleResult:
    """Minimum number of same-colored adjacent vertex pairs over all STCs
    with max degree + 1 colors."""
    elements = g.element_count
    if elements > cap:
        return OracleResult(None, elements, 0, True, "cap")
    if cache is not None:
        hit = cache.get(g, "min_beta", {})
        if hit is not None:
            return hit
    s = _Search(g, max_degree(g) + 1, tc=False)
    value = s.run_min_beta()
    res = OracleResult(value, elements, s.nodes, False, "ok")
    if cache is not None:
        cache.put(g, "min_beta", {}, res)
    return res


def min_gamma(
    g: Graph, cap: int = DEFAULT_CAP, cache: Optional["OracleCache"] = None
) -> OracleResult:
    """Minimum gamma over all TCs with max degree + 1 colors, or the no-TC
    state when none exists."""
    elements = g.element_count
    if elements > cap:
        return OracleResult(None, elements, 0, True, "cap")
    if cache is not None:
        hit = cache.get(g, "min_gamma", {})
        if hit is not None:
            return hit
    s = _Search(g, max_degree(g) + 1, tc=True)
    value = s.run_min_gamma()
    status = "ok" if value is not None else "no-tc"
    res = OracleResult(value, elements, s.nodes, False, status)
    if cache is not None:
        cache.put(g, "min_gamma", {}, res)
    return res


# -- on-disk cache -------------------------------------------------------


class OracleCache:
    """Content-addressed result table keyed by the canonical graph encoding."""

    def __init__(self, path: str):
        self.path = path
        self._table: dict[str, dict] = {}
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                self._table = json.load(fh)

    @staticmethod
    def _key(g: Graph, op: str, params: dict) -> str:
        payload = json.dumps(
            {"graph": {"n": g.n, "edges": [list(e) for e in g.edges]}, "op": op, "params": params},
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode()).hexdigest()

    def get(self, g: Graph, op: str, params: dict) -> Optional[OracleResult]:
        row = self._table.get(self._key(g, op, params))
        if row is None:
            return None
        return OracleResult(**row)

    def put(self, g: Graph, op: str, params: dict, res: OracleResult) -> None:
        self._table[self._key(g, op, params)] = res.to_json()
        tmp = self.path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(self._table, fh, sort_keys=True, indent=0)
        os.replace(tmp, self.path)

    def dump_text(self) -> str:
        lines = [f"{key} {json.dumps(row, sort_keys=True)}" for key, row in sorted(self._table.items())]
        return "\n".join(lines)
