"""Constructors for the graph families used throughout the catalog.

Covers LCF and extended-LCF notation, Haar graphs, Moebius and fattened
Moebius ladders, prisms, generalized Petersen graphs and the two vertex
expansion operations, plus a naive isomorphism check used to validate
constructions against each other on small instances.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    HamiltonDecomposition,
    build_graph,
    girth,
    max_degree,
    verify_hamilton,
)


@dataclass(frozen=True)
class LcfNotation:
    """Chord offsets applied around a Hamilton cycle.

    Plain notation has one offset per group; the extended form allows a
    whole group of chords at each position.  ``exponent`` repeats the group
    sequence.
    """

    groups: tuple[tuple[int, ...], ...]
    exponent: int = 1

    @property
    def is_extended(self) -> bool:
        return any(len(g) != 1 for g in self.groups)

    def positions(self) -> int:
        return len(self.groups) * self.exponent

    def __str__(self) -> str:
        if self.is_extended:
            body = ",".join("(" + ",".join(map(str, g)) + ")" for g in self.groups)
        else:
            body = ",".join(str(g[0]) for g in self.groups)
        return f"[{body}]^{self.exponent}"


def parse_lcf(text: str) -> LcfNotation:
    """Parse ``[5,-5]^7`` or ``[(-11,-15,7),(11,15,-7)]^7``; whitespace-free
    or not.  A missing exponent means 1."""
    s = re.sub(r"\s+", "", text)
    m = re.fullmatch(r"\[(.*)\](?:\^(\d+))?", s)
    if not m:
        raise GraphError(f"bad LCF notation {text!r}")
    body, exp = m.group(1), int(m.group(2) or 1)
    groups: list[tuple[int, ...]] = []
    if body.startswith("("):
        for part in re.findall(r"\(([^()]*)\)", body):
            groups.append(tuple(int(x) for x in part.split(",") if x))
        if not groups:
            raise GraphError(f"bad extended LCF notation {text!r}")
    else:
        groups = [(int(x),) for x in body.split(",") if x]
    if not groups:
        raise GraphError(f"empty LCF notation {text!r}")
    return LcfNotation(tuple(groups), exp)


def _lcf_chords(notation: LcfNotation, n: int) -> list[tuple[int, int]]:
    cycle_pairs = {(i, (i + 1) % n) for i in range(n)}
    cycle_pairs |= {(b, a) for a, b in cycle_pairs}
    chords: set[tuple[int, int]] = set()
    flat = [g for g in notation.groups]
    for i in range(n):
        group = flat[i % len(flat)]
        for off in group:
            if off % n == 0:
                raise GraphError(f"offset {off} is 0 mod {n}")
            j = (i + off) % n
            if (i, j) in cycle_pairs:
                raise GraphError(f"offset {off} at position {i} collides with the cycle")
            chords.add((min(i, j), max(i, j)))
    return sorted(chords)


def from_lcf(
    notation: LcfNotation | str, n: Optional[int] = None, name: Optional[str] = None
) -> tuple[Graph, HamiltonDecomposition]:
    """Build the Hamiltonian graph a plain LCF string describes.

    The vertex count defaults to group count times exponent and must match
    it when given explicitly.
    """
    if isinstance(notation, str):
        notation = parse_lcf(notation)
    if notation.is_extended:
        raise GraphError("extended notation needs from_extended_lcf")
    implied = notation.positions()
    if n is None:
        n = implied
    elif n != implied:
        raise GraphError(f"notation covers {implied} positions, not n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += _lcf_chords(notation, n)
    g = build_graph(n, edges, name=name)
    return g, verify_hamilton(g, list(range(n)))


@dataclass(frozen=True)
class LcfValidation:
    regular_degree: Optional[int]  # None when not regular
    girth: float
    expected_degree: Optional[int] = None
    expected_girth: Optional[int] = None

    @property
    def ok(self) -> bool:
        deg_ok = self.expected_degree is None or self.regular_degree == self.expected_degree
        g_ok = self.expected_girth is None or self.girth == self.expected_girth
        return deg_ok and g_ok


def from_extended_lcf(
    notation: LcfNotation | str,
    n: int,
    name: Optional[str] = None,
    expected_degree: Optional[int] = None,
    expected_girth: Optional[int] = None,
) -> tuple[Graph, HamiltonDecomposition, LcfValidation]:
    """Extended LCF build: the group pattern is applied cyclically over n
    positions.  A regularity/girth report is attached instead of silently
    trusting the notation."""
    if isinstance(notation, str):
        notation = parse_lcf(notation)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += _lcf_chords(notation, n)
    g = build_graph(n, edges, name=name)
    degs = {g.degree(v) for v in range(g.n)}
    report = LcfValidation(
        regular_degree=degs.pop() if len(degs) == 1 else None,
        girth=girth(g),
        expected_degree=expected_degree,
        expected_girth=expected_girth,
    )
    return g, verify_hamilton(g, list(range(n))), report


# -- bipartite circulant-style graphs ----------------------------------


def haar(N: int, name: Optional[str] = None) -> Graph:
    """Bipartite graph encoded by the binary expansion of N.

    With n the bit length and b_0 the most significant bit, part vertices
    u_0..u_{n-1} map to 0..n-1 and w_0..w_{n-1} to n..2n-1; u_i joins
    w_{(i+t) mod n} for every t whose bit b_t is set.
    """
    if N <= 0:
        raise GraphError("Haar index must be positive")
    bits = bin(N)[2:]
    n = len(bits)
    offsets = [t for t, b in enumerate(bits) if b == "1"]
    edges = []
    for i in range(n):
        for t in offsets:
            edges.append((i, n + (i + t) % n))
    return build_graph(2 * n, sorted(set(edges)), name=name)


def mobius_ladder(r: int, name: Optional[str] = None) -> tuple[Graph, HamiltonDecomposition]:
    """2r-cycle plus the r rungs joining opposite vertices."""
    if r < 2:
        raise GraphError("Moebius ladder needs r >= 2")
    n = 2 * r
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, i + r) for i in range(r)]
    g = build_graph(n, edges, name=name)
    return g, verify_hamilton(g, list(range(n)))


def fat_mobius(r: int, name: Optional[str] = None) -> Graph:
    """Fattened Moebius ladder on 4r vertices, as the Haar graph of
    2^(2r-1) + 2^(r-1) + 1."""
    if r < 3:
        raise GraphError("fat Moebius ladder needs r >= 3")
    return haar(2 ** (2 * r - 1) + 2 ** (r - 1) + 1, name=name)


def fat_mobius_constructive(r: int) -> Graph:
    """Cross-check construction: split every ladder vertex in two along the
    cycle and cross the rung replacements.  Used only to validate fat_mobius
    on small r by isomorphism."""
    if r < 3:
        raise GraphError("fat Moebius ladder needs r >= 3")
    m = 2 * r
    # cycle alternates primed/double-primed copies of the original vertices
    a = lambda i: 2 * (i % m)       # v'_i
    b = lambda i: 2 * (i % m) + 1   # v''_i
    edges = []
    for i in range(m):
        edges.append((a(i), b((i + 1) % m)))
        edges.append((b((i + 1) % m), a((i + 1) % m)))
    for i in range(m):
        edges.append(tuple(sorted((a(i), b((i + r) % m)))))
    return build_graph(2 * m, sorted(set(edges)))


def prism(m: int, name: Optional[str] = None) -> tuple[Graph, Optional[HamiltonDecomposition]]:
    """C_m x K_2 with outer ring 0..m-1 and inner ring m..2m-1.

    For even m a Hamilton cycle (outer path, cross, inner path back) is
    attached; odd prisms are returned without one.
    """
    if m < 3:
        raise GraphError("prism needs m >= 3")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    g = build_graph(2 * m, edges, name=name)
    if m % 2:
        return g, None
    cycle = list(range(m)) + [m + i for i in reversed(range(m))]
    return g, verify_hamilton(g, cycle)


def generalized_petersen(m: int, k: int, name: Optional[str] = None) -> Graph:
    """Outer m-cycle, inner star polygon with step k, and spokes."""
    if m < 3 or not (1 <= k < m / 2):
        raise GraphError(f"generalized Petersen parameters out of range: ({m},{k})")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    edges += [tuple(sorted((m + i, m + (i + k) % m))) for i in range(m)]
    return build_graph(2 * m, sorted(set(edges)), name=name)


# -- vertex expansions ---------------------------------------------------

K23 = "K23"
K23_WITH_TRIANGLE = "K23_with_one_triangle"


def vertex_expand(
    g: Graph, variant: str = K23, name: Optional[str] = None, with_blocks: bool = False
):
    """Replace every vertex of a cubic graph by a K_{2,3} block whose three
    degree-2 vertices take over the original edges, one each.

    The triangle variant swaps the block of the lowest vertex id for a K_3
    with each triangle corner taking one original edge.  The result is cubic
    on 5n (respectively 5n-2) vertices.  ``with_blocks`` also returns the
    per-vertex block structure, which coloring constructors need.
    """
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise GraphError("vertex expansion is defined for cubic graphs")
    if variant not in (K23, K23_WITH_TRIANGLE):
        raise GraphError(f"unknown expansion variant {variant!r}")
    triangle_at = 0 if variant == K23_WITH_TRIANGLE else None
    blocks: list[dict] = []
    next_id = 0
    edges: list[tuple[int, int]] = []
    for v in range(g.n):
        if v == triangle_at:
            t = [next_id, next_id + 1, next_id + 2]
            next_id += 3
            edges += [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
            blocks.append({"kind": "k3", "hubs": [], "ports": t})
        else:
            a = [next_id, next_id + 1]
            bs = [next_id + 2, next_id + 3, next_id + 4]
            next_id += 5
            for x in a:
                for y in bs:
                    edges.append((x, y))
            blocks.append({"kind": "k23", "hubs": a, "ports": bs})
    original: list[tuple[int, int]] = []
    for u, v in g.edges:
        pu = blocks[u]["ports"][g.adjacency[u].index(v)]
        pv = blocks[v]["ports"][g.adjacency[v].index(u)]
        original.append(tuple(sorted((pu, pv))))
    out = build_graph(next_id, edges + original, name=name)
    if with_blocks:
        return out, blocks, original
    return out


def expansion_stc(g: Graph, variant: str = K23, name: Optional[str] = None):
    """A deterministic valid STC of a vertex expansion.

    The inherited original edges form one color class (the spare color 3);
    K_{2,3} hubs take color 3 as well, forced by their three block edges
    using 0,1,2, while port vertices and triangle corners take whatever
    their incident edges leave free.  Returns (expanded graph, coloring).
    """
    from .coloring import Coloring, is_valid_stc

    out, blocks, original = vertex_expand(g, variant, name=name, with_blocks=True)
    vcol = [0] * out.n
    ecol = [0] * out.m
    for u, v in original:
        ecol[out.edge_index(u, v)] = 3
    for block in blocks:
        p = block["ports"]
        if block["kind"] == "k23":
            a0, a1 = block["hubs"]
            plan = [(a0, [0, 1, 2]), (a1, [1, 2, 0])]
            for hub, cols in plan:
                for port, c in zip(p, cols):
                    ecol[out.edge_index(hub, port)] = c
            vcol[a0] = 3
            vcol[a1] = 3
            vcol[p[0]], vcol[p[1]], vcol[p[2]] = 2, 0, 1
        else:
            t0, t1, t2 = p
            ecol[out.edge_index(t0, t1)] = 0
            ecol[out.edge_index(t0, t2)] = 1
            ecol[out.edge_index(t1, t2)] = 2
            vcol[t0], vcol[t1], vcol[t2] = 2, 1, 0
    mu = Coloring(out, tuple(vcol), tuple(ecol))
    if not is_valid_stc(mu):
        raise GraphError("expansion coloring construction failed")
    return out, mu


# -- naive isomorphism check --------------------------------------------


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """Backtracking isomorphism search for small graphs (n <= 60 or so).

    Returns a vertex map g1 -> g2 or None.  Prunes on degree sequences and
    on adjacency consistency while mapping vertices in a BFS-ish order of
    g1.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(g1.degree, range(g1.n))) != sorted(map(g2.degree, range(g2.n))):
        return None

    order = sorted(range(g1.n), key=lambda v: -g1.degree(v))
    # reorder to keep each vertex near an already-mapped neighbor
    placed: list[int] = []
    placed_set: set[int] = set()
    pending = order[:]
    while pending:
        pick = None
        for v in pending:
            if any(w in placed_set for w in g1.adjacency[v]):
                pick = v
                break
        if pick is None:
            pick = pending[0]
        pending.remove(pick)
        placed.append(pick)
        placed_set.add(pick)

    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(i: int) -> bool:
        if i == len(placed):
            return True
        v = placed[i]
        for w in range(g2.n):
            if used[w] or g2.degree(w) != g1.degree(v):
                continue
            ok = True
            for x in g1.adjacency[v]:
                if mapping[x] >= 0 and not g2.has_edge(w, mapping[x]):
                    ok = False
                    break
            if ok:
                mapped_nbrs = sum(1 for x in g1.adjacency[v] if mapping[x] >= 0)
                back = sum(1 for y in g2.adjacency[w] if y in mapped_targets)
                if mapped_nbrs != back:
                    ok = False
            if ok:
                mapping[v] = w
                used[w] = True
                mapped_targets.add(w)
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
                mapped_targets.discard(w)
        return False

    mapped_targets: set[int] = set()
    if extend(0):
        return mapping
    return None


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
