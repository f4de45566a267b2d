// Pure view-model derivations.  Everything here is a function of the
// server-reported session plus local UI selections; no validity or color
// math is re-decided client-side beyond labeling what the server returned.

import { layoutFor, Point } from "./layout.js";
import type { McapJson, McapsPayload, SessionState, TraceStep } from "./types.js";

export const COLOR_NAMES = ["hazel", "red", "blue", "green", "orange", "violet", "teal", "magenta"];
export const COLOR_VALUES = ["#b8860b", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#17a2b2", "#e377c2"];
export const COLOR_GLYPHS = ["●", "■", "▲", "◆", "★", "✶", "⬢", "✖"];

export function colorName(c: number): string {
    return COLOR_NAMES[c] ?? `c${c}`;
}

export function colorValue(c: number): string {
    return COLOR_VALUES[c % COLOR_VALUES.length];
}

export function badgesForStep(step: TraceStep): string[] {
    const [b0, g0] = step.before;
    const [b1, g1] = step.after;
    const out: string[] = [];
    if (b1 < b0) {
        out.push(b1 === 0 ? "total β-reduction" : "partial β-reduction");
    }
    if (g1 < g0) {
        out.push(g1 <= 1 ? "total γ-reduction" : "partial γ-reduction");
    }
    if (!out.length) {
        out.push("neutral");
    }
    return out;
}

export function summaryLine(listing: SessionState["listing"]): string {
    const parts: string[] = [];
    const totals = listing.totals;
    let i = 0;
    while (i < totals.length) {
        let j = i;
        while (j < totals.length && totals[j] === totals[i]) j++;
        parts.push(j - i > 1 ? `${totals[i]}^${j - i}` : `${totals[i]}`);
        i = j;
    }
    return `${listing.name}(${parts.join(",")})`;
}

export interface TimelineEntry {
    index: number;
    kind: "swap" | "flip";
    label: string;
    badges: string[];
    applied: boolean;
}

export function timeline(steps: TraceStep[], cursor: number): TimelineEntry[] {
    return steps.map((step, index) => ({
        index,
        kind: step.kind,
        label: `${step.kind} (${step.colors.join(",")}) ${step.before.join("/")}→${step.after.join("/")}`,
        badges: badgesForStep(step),
        applied: index < cursor,
    }));
}

export interface EdgeView {
    index: number;
    u: number;
    v: number;
    color: number;
    isChord: boolean;
    isBeta: boolean;
    highlighted: boolean;
    direction: 1 | -1 | 0;
}

export interface ViewState {
    positions: Point[];
    edges: EdgeView[];
    vertexColors: number[];
    highlightedVertices: Set<number>;
    listing: SessionState["listing"];
    summary: string;
    cursor: number;
    canUndo: boolean;
    canRedo: boolean;
}

export function explorerView(
    session: SessionState,
    highlighted: McapJson | null,
): ViewState {
    const graph = session.graph;
    const positions = layoutFor(graph, session.hamilton);
    const cycleEdges = new Set<number>();
    if (session.hamilton) {
        const index = new Map<string, number>();
        graph.edges.forEach(([u, v], ei) => index.set(`${u},${v}`, ei));
        const n = session.hamilton.length;
        for (let i = 0; i < n; i++) {
            const a = session.hamilton[i];
            const b = session.hamilton[(i + 1) % n];
            const key = a < b ? `${a},${b}` : `${b},${a}`;
            const ei = index.get(key);
            if (ei !== undefined) cycleEdges.add(ei);
        }
    }
    const beta = new Set(session.beta_edges);
    const highlightEdges = new Map<number, 1 | -1>();
    const highlightVerts = new Set<number>();
    if (highlighted) {
        // the two path ends are the recolored vertices; only they get marked
        highlightVerts.add(highlighted.vertices[0]);
        highlightVerts.add(highlighted.vertices[highlighted.vertices.length - 1]);
        highlighted.edges.forEach((ei, i) => {
            const [u] = graph.edges[ei];
            highlightEdges.set(ei, highlighted.vertices[i] === u ? 1 : -1);
        });
    }
    const edges: EdgeView[] = graph.edges.map(([u, v], ei) => ({
        index: ei,
        u,
        v,
        color: session.coloring.edge_colors[ei],
        isChord: cycleEdges.size > 0 && !cycleEdges.has(ei),
        isBeta: beta.has(ei),
        highlighted: highlightEdges.has(ei),
        direction: highlightEdges.get(ei) ?? 0,
    }));
    return {
        positions,
        edges,
        vertexColors: session.coloring.vertex_colors.slice(),
        highlightedVertices: highlightVerts,
        listing: session.listing,
        summary: summaryLine(session.listing),
        cursor: session.cursor,
        canUndo: session.can_undo,
        canRedo: session.can_redo,
    };
}

export function flipsAsPaths(mcaps: McapsPayload): { label: string; apply: "swap" | "flip" }[] {
    const out: { label: string; apply: "swap" | "flip" }[] = [];
    for (const m of mcaps.mcaps) {
        out.push({ label: `path ${m.vertices.join("→")} (${m.colors.join(",")})`, apply: "swap" });
    }
    for (const f of mcaps.flips) {
        out.push({ label: `flip edge ${f.endpoints.join("–")} (${f.colors.join(",")})`, apply: "flip" });
    }
    return out;
}
