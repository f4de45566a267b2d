"""Curated graph catalog with Hamilton cycles, color patterns, reduction
trace scripts, stored colorings and covering maps.

Everything lives as JSON under ``data/``: one Graph JSON file per entry
plus a sidecar with hamilton sequences, pattern strings and provenance.
The files are produced once by ``tools/generate_data.py`` and validated by
the test suite; this module only loads them.  Moebius ladders are served
parametrically under keys like ``mobius_ladder_12``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from .coloring import Coloring, apply_pattern
from .graph import Graph, HamiltonDecomposition, verify_hamilton
from .families import mobius_ladder
from .kempe import Mcap, ReductionTrace, mcap_from_vertices, trace_from_moves


class CatalogError(KeyError):
    """Raised for unknown catalog keys or missing data files."""


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    graph: Graph
    hamilton: Optional[HamiltonDecomposition]
    pattern: Optional[str]
    provenance: str
    validation: Optional[dict] = None

    def lacunar_stc(self) -> Coloring:
        """The stored lacunar STC, from the pattern over the Hamilton cycle."""
        if self.hamilton is None or self.pattern is None:
            raise CatalogError(f"{self.key} carries no stored pattern")
        return apply_pattern(self.hamilton, self.pattern)


def _data_text(relpath: str) -> str:
    root = resources.files("semitotal").joinpath("data")
    f = root.joinpath(relpath)
    if not f.is_file():
        raise CatalogError(f"missing data file {relpath}")
    return f.read_text(encoding="utf-8")


@lru_cache(maxsize=1)
def _meta() -> dict:
    return json.loads(_data_text("catalog_meta.json"))


@lru_cache(maxsize=1)
def catalog_keys() -> tuple[str, ...]:
    return tuple(sorted(_meta().keys()))


_MOB_RE = re.compile(r"mobius_ladder_(\d+)$")


@lru_cache(maxsize=None)
def catalog(key: str) -> CatalogEntry:
    m = _MOB_RE.match(key)
    if m:
        return _mobius_entry(int(m.group(1)))
    meta = _meta().get(key)
    if meta is None:
        raise CatalogError(
            f"unknown catalog key {key!r} (see catalog_keys(), or mobius_ladder_<2r>)"
        )
    graph = Graph.from_json(json.loads(_data_text(f"catalog/{key}.json")))
    ham = None
    if meta.get("hamilton") is not None:
        ham = verify_hamilton(graph, meta["hamilton"])
    return CatalogEntry(
        key=key,
        graph=graph,
        hamilton=ham,
        pattern=meta.get("pattern"),
        provenance=meta.get("provenance", ""),
        validation=meta.get("validation"),
    )


def _mobius_entry(r: int) -> CatalogEntry:
    if r < 2:
        raise CatalogError("mobius_ladder keys take the rung count r >= 2, e.g. mobius_ladder_6")
    graph, ham = mobius_ladder(r, name=f"mobius_ladder_{r}")
    pattern = None
    if r % 3 == 0:
        pattern = f"((0_2 1_0 2_1)^{2 * r // 3})"
    return CatalogEntry(
        key=f"mobius_ladder_{r}",
        graph=graph,
        hamilton=ham,
        pattern=pattern,
        provenance="ladder on a 2r-cycle with opposite-vertex rungs",
    )


# -- stored reduction scripts, colorings and covering maps ---------------


def stored_trace(key: str) -> dict:
    return json.loads(_data_text(f"traces/{key}.json"))


def replay_stored_trace(key: str) -> ReductionTrace:
    """Re-run a stored move script from its catalog coloring.

    All classifications and statistics are recomputed during replay; the
    stored expectations are for the test suite to assert, not to trust.
    """
    spec = stored_trace(key)
    entry = catalog(spec["graph"])
    mu = entry.lacunar_stc()
    moves = []
    for step in spec["steps"]:
        if step["kind"] == "swap":
            c0, c1 = step["colors"]
            moves.append(("swap", mcap_from_code(mu, moves, step["vertices"], c0, c1)))
        else:
            u, v = step["edge"]
            moves.append(("flip", entry.graph.edge_index(u, v)))
    return trace_from_moves(mu, moves, goal=f"replay:{key}")


def mcap_from_code(mu: Coloring, moves: list, vertices: list[int], c0: int, c1: int) -> Mcap:
    # paths later in a script are validated against the coloring reached
    # by the earlier moves
    from .kempe import apply_move

    cur = mu
    for mv in moves:
        cur = apply_move(cur, mv)
    return mcap_from_vertices(cur, vertices, c0, c1)


def stored_coloring(key: str) -> Coloring:
    obj = json.loads(_data_text(f"colorings/{key}.json"))
    graph = catalog(obj["graph"]).graph if isinstance(obj["graph"], str) else None
    return Coloring.from_json(obj, graph)


def stored_cover(key: str) -> dict:
    """Raw covering map data: source/target graphs (inline or by key) and
    the vertex map."""
    obj = json.loads(_data_text(f"covers/{key}.json"))
    out = dict(obj)
    for side in ("source", "target"):
        if isinstance(obj[side], str):
            out[side + "_graph"] = catalog(obj[side]).graph
        else:
            out[side + "_graph"] = Graph.from_json(obj[side])
    return out
