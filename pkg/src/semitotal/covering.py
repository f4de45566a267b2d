"""Covering maps between graphs and pullback of colorings along them.

A covering map sends vertices of the source onto the target so that every
open neighborhood maps bijectively onto the image's neighborhood and all
fibers share one size r.  Pulling a coloring back along such a map scales
beta and gamma by exactly r, which is asserted numerically on every lift
rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring, beta_gamma, is_valid_stc, validate
from .graph import Graph, max_degree


class CoveringError(ValueError):
    """Raised when a vertex map fails the covering conditions."""


@dataclass(frozen=True)
class CoveringMap:
    source: Graph
    target: Graph
    vertex_map: tuple[int, ...]
    fold: int
    edge_map: tuple[int, ...]  # source edge index -> target edge index

    def to_json(self, source_name=None, target_name=None) -> dict:
        return {
            "source": source_name or self.source.name or self.source.to_json(),
            "target": target_name or self.target.name or self.target.to_json(),
            "map": list(self.vertex_map),
        }


def verify_covering(g: Graph, gp: Graph, f: Sequence[int]) -> CoveringMap:
    """Validate f: V(g) -> V(gp) as an r-fold covering map."""
    if len(f) != g.n:
        raise CoveringError(f"map covers {len(f)} of {g.n} vertices")
    for v, img in enumerate(f):
        if not (0 <= img < gp.n):
            raise CoveringError(f"f({v}) = {img} is not a target vertex")
    fibers: dict[int, int] = {}
    for img in f:
        fibers[img] = fibers.get(img, 0) + 1
    if len(fibers) != gp.n:
        missing = sorted(set(range(gp.n)) - set(fibers))
        raise CoveringError(f"map is not surjective; {missing[:5]} uncovered")
    sizes = set(fibers.values())
    if len(sizes) != 1:
        off = min(fibers, key=lambda x: fibers[x])
        raise CoveringError(f"fibers are unequal (vertex {off} has fiber {fibers[off]})")
    r = sizes.pop()
    for v in range(g.n):
        images = [f[w] for w in g.adjacency[v]]
        if len(set(images)) != len(images) or set(images) != set(gp.adjacency[f[v]]):
            raise CoveringError(
                f"neighborhood of vertex {v} does not map bijectively onto that of {f[v]}"
            )
    edge_map = []
    for u, v in g.edges:
        edge_map.append(gp.edge_index(f[u], f[v]))
    return CoveringMap(g, gp, tuple(f), r, tuple(edge_map))


def lift_coloring(cm: CoveringMap, mup: Coloring) -> Coloring:
    """Pull a valid STC on the target back to the source.

    Vertices take the color of their image, edges the color of their image
    edge.  STC validity is preserved, and beta and gamma scale by the fold;
    both facts are re-checked here on every call.
    """
    if mup.graph.edges != cm.target.edges or mup.graph.n != cm.target.n:
        raise CoveringError("coloring is not on the covering map's target")
    if not is_valid_stc(mup):
        raise CoveringError("lift requires a valid STC on the target")
    if max_degree(cm.source) != max_degree(cm.target):
        raise CoveringError("source and target must share the same maximum degree")
    vcol = tuple(mup.vertex_colors[cm.vertex_map[v]] for v in range(cm.source.n))
    ecol = tuple(mup.edge_colors[cm.edge_map[ei]] for ei in range(cm.source.m))
    mu = Coloring(cm.source, vcol, ecol)
    if not is_valid_stc(mu):
        raise CoveringError("lift produced an invalid STC; covering map is inconsistent")
    b1, g1 = beta_gamma(mup)
    b2, g2 = beta_gamma(mu)
    if (b2, g2) != (cm.fold * b1, cm.fold * g1):
        raise CoveringError(
            f"scaling law violated: ({b2},{g2}) != {cm.fold} * ({b1},{g1})"
        )
    if validate(mup).is_tc and not validate(mu).is_tc:
        raise CoveringError("lift of a TC failed to be a TC")
    return mu
