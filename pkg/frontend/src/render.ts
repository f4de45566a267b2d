// String-based SVG/HTML rendering of the view model.  Pure functions so
// the headless tests can assert on markup without a DOM.

import { badgesForStep, colorName, colorValue, COLOR_GLYPHS, TimelineEntry, ViewState } from "./state.js";
import type { FlipJson, McapJson } from "./types.js";

const R = 190;
const CX = 210;
const CY = 210;

function pt(p: { x: number; y: number }): [number, number] {
    return [CX + R * p.x, CY + R * p.y];
}

export function renderSvg(view: ViewState): string {
    const out: string[] = [];
    out.push(
        `<svg viewBox="0 0 ${2 * CX} ${2 * CY}" xmlns="http://www.w3.org/2000/svg">`,
        `<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto">` +
            `<path d="M0,0 L6,3 L0,6 z" fill="#222"/></marker></defs>`,
    );
    for (const e of view.edges) {
        const [x1, y1] = pt(view.positions[e.u]);
        const [x2, y2] = pt(view.positions[e.v]);
        const cls = [
            "edge",
            e.isChord ? "chord" : "cycle",
            e.isBeta ? "beta" : "",
            e.highlighted ? "mcap" : "",
        ]
            .filter(Boolean)
            .join(" ");
        const width = e.highlighted ? 4 : e.isBeta ? 3 : 1.6;
        const dash = e.isBeta ? ' stroke-dasharray="6,3"' : "";
        const marker = e.highlighted ? ' marker-end="url(#arrow)"' : "";
        const [ax1, ay1, ax2, ay2] = e.direction >= 0 ? [x1, y1, x2, y2] : [x2, y2, x1, y1];
        out.push(
            `<line class="${cls}" data-edge="${e.index}" x1="${ax1.toFixed(1)}" y1="${ay1.toFixed(1)}" ` +
                `x2="${ax2.toFixed(1)}" y2="${ay2.toFixed(1)}" stroke="${colorValue(e.color)}" ` +
                `stroke-width="${width}"${dash}${marker}/>`,
        );
        if (e.isBeta) {
            const mx = (x1 + x2) / 2;
            const my = (y1 + y2) / 2;
            out.push(`<text class="beta-mark" x="${mx.toFixed(1)}" y="${my.toFixed(1)}">β</text>`);
        }
    }
    view.vertexColors.forEach((c, v) => {
        const [x, y] = pt(view.positions[v]);
        const hl = view.highlightedVertices.has(v);
        out.push(
            `<circle class="vertex${hl ? " mcap-end" : ""}" data-vertex="${v}" cx="${x.toFixed(1)}" ` +
                `cy="${y.toFixed(1)}" r="${hl ? 13 : 10}" fill="${colorValue(c)}"/>`,
            `<text class="vlabel" x="${x.toFixed(1)}" y="${(y + 4).toFixed(1)}">${c}</text>`,
        );
    });
    out.push("</svg>");
    return out.join("\n");
}

export function renderListing(view: ViewState): string {
    const l = view.listing;
    const rows = l.totals
        .map(
            (t, c) =>
                `<tr><td><span class="swatch" style="background:${colorValue(c)}"></span>` +
                `${c} ${colorName(c)} ${COLOR_GLYPHS[c] ?? ""}</td>` +
                `<td>${l.vertex_counts[c]}+${l.edge_counts[c]}=${t}</td></tr>`,
        )
        .join("");
    const flags = [
        l.is_tc ? "TC" : l.is_stc ? "STC" : "invalid",
        l.is_equitable ? "equitable" : `γ=${l.gamma}`,
        `β=${l.beta}`,
    ].join(" · ");
    return (
        `<table class="listing">${rows}</table>` +
        `<div class="summary" data-summary="${view.summary}">${view.summary}</div>` +
        `<div class="flags">${flags}</div>`
    );
}

export function renderMoves(mcaps: McapJson[], flips: FlipJson[], highlight: number | null): string {
    const items: string[] = [];
    mcaps.forEach((m, i) => {
        const sel = i === highlight ? " selected" : "";
        items.push(
            `<li class="move mcap${sel}" data-mcap="${i}">swap ${m.vertices.join("→")} ` +
                `(${m.colors.join(",")})</li>`,
        );
    });
    flips.forEach((f) => {
        items.push(
            `<li class="move flip" data-flip="${f.edge}">flip ${f.endpoints.join("–")} ` +
                `(${f.colors.join(",")})</li>`,
        );
    });
    return `<ul class="moves">${items.length ? items.join("") : "<li class='empty'>no moves for this pair</li>"}</ul>`;
}

export function renderTimeline(entries: TimelineEntry[]): string {
    const items = entries
        .map((e) => {
            const badges = e.badges.map((b) => `<span class="badge">${b}</span>`).join("");
            return `<li class="step${e.applied ? " applied" : " undone"}">${e.index + 1}. ${e.label} ${badges}</li>`;
        })
        .join("");
    return `<ol class="timeline">${items}</ol>`;
}

export function lastStepBadges(step: { before: [number, number]; after: [number, number]; kind: string } | null): string {
    if (!step) return "";
    return badgesForStep(step as Parameters<typeof badgesForStep>[0])
        .map((b) => `<span class="badge">${b}</span>`)
        .join("");
}
