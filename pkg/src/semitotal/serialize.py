"""Canonical JSON payloads shared by the CLI and the HTTP service.

Both surfaces must produce byte-identical JSON for the same operation, so
they all funnel through :func:`dumps` (sorted keys, compact separators)
and build their payloads with the helpers here.
"""

from __future__ import annotations

import json
from typing import Optional

from .coloring import Coloring, beta_edges, listing, validate
from .kempe import enumerate_mcaps


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def payload_graph(mu_or_graph) -> dict:
    g = mu_or_graph
    return g.to_json()


def payload_validation(mu: Coloring) -> dict:
    return validate(mu).to_json()


def payload_listing(mu: Coloring, name: Optional[str] = None) -> dict:
    out = listing(mu).to_json()
    out["name"] = name or (mu.graph.name or "G")
    return out


def payload_mcaps(mu: Coloring, pair=None) -> dict:
    mcaps = [m.to_json() for m in enumerate_mcaps(mu, pair)]
    flips = []
    for ei in beta_edges(mu):
        u, v = mu.graph.edges[ei]
        if pair is not None:
            c0, c1 = pair
            if mu.vertex_colors[u] != c0 or mu.edge_colors[ei] != c1:
                continue
        flips.append(
            {
                "edge": ei,
                "endpoints": [u, v],
                "colors": [mu.vertex_colors[u], mu.edge_colors[ei]],
            }
        )
    return {"mcaps": mcaps, "flips": flips}


def payload_coloring(mu: Coloring, graph_name: Optional[str] = None) -> dict:
    return mu.to_json(graph_name)
