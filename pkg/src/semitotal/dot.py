"""Graphviz DOT export of graphs and colorings.

Each element carries three attributes: ``tcolor`` (the numeric color, for
machine reads), ``color`` (the project palette name: hazel, red, blue,
green, then the extended names below for larger palettes), and ``gvcolor``
(a Graphviz-renderable value, since ``hazel`` is not an X11 color name).
"""

from __future__ import annotations

from typing import Optional

from .coloring import Coloring
from .graph import Graph

PALETTE_NAMES = ["hazel", "red", "blue", "green", "orange", "violet", "teal", "magenta"]
GV_COLORS = {
    "hazel": "darkgoldenrod",
    "red": "red",
    "blue": "blue",
    "green": "green3",
    "orange": "orange",
    "violet": "violet",
    "teal": "teal",
    "magenta": "magenta",
}


def color_name(c: int) -> str:
    if c < len(PALETTE_NAMES):
        return PALETTE_NAMES[c]
    return f"c{c}"


def to_dot(g: Graph, mu: Optional[Coloring] = None) -> str:
    name = g.name or "G"
    lines = [f'graph "{name}" {{']
    lines.append('  node [shape=circle, style=filled, fillcolor=white];')
    for v in range(g.n):
        attrs = [f'label="{v}"']
        if mu is not None:
            c = mu.vertex_colors[v]
            nm = color_name(c)
            attrs += [
                f"tcolor={c}",
                f'color="{nm}"',
                f'gvcolor="{GV_COLORS.get(nm, "black")}"',
                f'fontcolor="{GV_COLORS.get(nm, "black")}"',
            ]
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for ei, (u, v) in enumerate(g.edges):
        attrs = []
        if mu is not None:
            c = mu.edge_colors[ei]
            nm = color_name(c)
            attrs = [
                f"tcolor={c}",
                f'color="{nm}"',
                f'gvcolor="{GV_COLORS.get(nm, "black")}"',
            ]
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
