// Vertex positions for the drawing: the stored Hamilton cycle becomes the
// outer circle (chords then fall inside, matching the catalog's figures);
// graphs without a stored cycle get a deterministic force layout.

import type { GraphJson } from "./types.js";

export interface Point {
    x: number;
    y: number;
}

export function circularLayout(n: number, cycle: number[]): Point[] {
    const pos: Point[] = new Array(n);
    cycle.forEach((v, i) => {
        const angle = (2 * Math.PI * i) / n - Math.PI / 2;
        pos[v] = { x: Math.cos(angle), y: Math.sin(angle) };
    });
    return pos;
}

export function forceLayout(graph: GraphJson, iterations = 150): Point[] {
    // deterministic: seed on a circle by vertex id, fixed-step relaxation
    const n = graph.n;
    const pos = circularLayout(n, Array.from({ length: n }, (_, i) => i));
    const k = Math.sqrt(4 / Math.max(n, 1));
    for (let it = 0; it < iterations; it++) {
        const disp: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
        for (let a = 0; a < n; a++) {
            for (let b = a + 1; b < n; b++) {
                let dx = pos[a].x - pos[b].x;
                let dy = pos[a].y - pos[b].y;
                const d2 = dx * dx + dy * dy + 1e-6;
                const f = (k * k) / d2;
                dx *= f;
                dy *= f;
                disp[a].x += dx;
                disp[a].y += dy;
                disp[b].x -= dx;
                disp[b].y -= dy;
            }
        }
        for (const [u, v] of graph.edges) {
            const dx = pos[u].x - pos[v].x;
            const dy = pos[u].y - pos[v].y;
            const d = Math.sqrt(dx * dx + dy * dy) + 1e-6;
            const f = d / k * 0.02;
            disp[u].x -= dx * f;
            disp[u].y -= dy * f;
            disp[v].x += dx * f;
            disp[v].y += dy * f;
        }
        const step = 0.05 * (1 - it / iterations) + 0.005;
        for (let v = 0; v < n; v++) {
            const d = Math.sqrt(disp[v].x ** 2 + disp[v].y ** 2) + 1e-6;
            const lim = Math.min(d, step);
            pos[v].x += (disp[v].x / d) * lim;
            pos[v].y += (disp[v].y / d) * lim;
        }
    }
    // normalize to the unit disc
    const r = Math.max(...pos.map((p) => Math.sqrt(p.x * p.x + p.y * p.y)), 1e-6);
    return pos.map((p) => ({ x: p.x / r, y: p.y / r }));
}

export function layoutFor(graph: GraphJson, hamilton: number[] | null): Point[] {
    if (hamilton && hamilton.length === graph.n) {
        return circularLayout(graph.n, hamilton);
    }
    return forceLayout(graph);
}
