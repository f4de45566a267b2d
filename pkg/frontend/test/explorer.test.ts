import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { ExplorerController } from "../src/controller.js";
import { badgesForStep, explorerView, summaryLine, timeline } from "../src/state.js";
import { circularLayout, layoutFor } from "../src/layout.js";
import { renderListing, renderMoves, renderSvg, renderTimeline } from "../src/render.js";
import { fixture, scriptedFetch } from "./mock.js";
import type { McapsPayload, SessionState, TraceStep } from "../src/types.js";

function q3Controller(script: Parameters<typeof scriptedFetch>[0]) {
    const { fetchFn, remaining } = scriptedFetch(script);
    const api = new ApiClient("", fetchFn);
    return { controller: new ExplorerController(api), remaining };
}

describe("q3 session drive", () => {
    it("loads, swaps the highlighted path, shows Q3(5^4) and undoes back to beta 2", async () => {
        const { controller, remaining } = q3Controller([
            { method: "POST", path: "/sessions", fixture: "create_q3.json" },
            { method: "GET", path: "/sessions/fix-q3/mcaps?c0=1&c1=3", fixture: "mcaps_q3_1_3.json" },
            { method: "POST", path: "/sessions/fix-q3/swap", fixture: "swap_q3.json" },
            { method: "GET", path: "/sessions/fix-q3/mcaps?c0=1&c1=3", fixture: "mcaps_q3_1_3_after.json" },
            { method: "POST", path: "/sessions/fix-q3/undo", fixture: "undo_q3.json" },
            { method: "GET", path: "/sessions/fix-q3/mcaps?c0=1&c1=3", fixture: "mcaps_q3_1_3.json" },
        ]);

        await controller.load("q3");
        expect(controller.session?.listing.beta).toBe(2);
        expect(controller.view?.summary).toBe("q3(5,6,5,4)");

        await controller.selectPair(1, 3);
        expect(controller.mcaps.mcaps.length).toBeGreaterThan(0);
        expect(controller.highlightedMcap).not.toBeNull();

        await controller.applyMcap(0);
        expect(controller.session?.listing.totals).toEqual([5, 5, 5, 5]);
        expect(controller.session?.listing.is_tc).toBe(true);
        expect(controller.view?.summary).toBe("q3(5^4)");
        expect(badgesForStep(controller.lastStep as TraceStep)).toContain("total β-reduction");

        await controller.undo();
        expect(controller.session?.listing.beta).toBe(2);
        expect(controller.session?.can_redo).toBe(true);
        expect(remaining()).toBe(0);
    });

    it("renders beta marks and a badge in markup", async () => {
        const { controller } = q3Controller([
            { method: "POST", path: "/sessions", fixture: "create_q3.json" },
        ]);
        await controller.load("q3");
        const svg = renderSvg(controller.view!);
        expect(svg).toContain('class="edge');
        expect((svg.match(/β/g) ?? []).length).toBe(2); // two marked edges
        const listing = renderListing(controller.view!);
        expect(listing).toContain("q3(5,6,5,4)");
        const swapResponse = fixture("swap_q3.json") as { last_step: TraceStep };
        const line = renderTimeline(timeline([swapResponse.last_step], 1));
        expect(line).toContain("total β-reduction");
        expect(line).toContain('class="step applied"');
    });

    it("treats a 409 as a stale path and refreshes", async () => {
        const { controller, remaining } = q3Controller([
            { method: "POST", path: "/sessions", fixture: "create_q3.json" },
            { method: "GET", path: "/sessions/fix-q3/mcaps?c0=1&c1=3", fixture: "mcaps_q3_1_3.json" },
            { method: "POST", path: "/sessions/fix-q3/swap", fixture: "swap_q3_stale.json", status: 409 },
            { method: "GET", path: "/sessions/fix-q3", fixture: "state_q3_after_swap.json" },
            { method: "GET", path: "/sessions/fix-q3/mcaps?c0=1&c1=3", fixture: "mcaps_q3_1_3_after.json" },
        ]);
        await controller.load("q3");
        await controller.selectPair(1, 3);
        await controller.applyMcap(0);
        expect(controller.notice).toContain("stale path");
        expect(remaining()).toBe(0);
    });
});

describe("auto-run", () => {
    it("applies the searched steps and reports beta/gamma badges", async () => {
        const { controller } = q3Controller([
            { method: "POST", path: "/sessions", fixture: "create_tutte_coxeter.json" },
        ]);
        await controller.load("tutte_coxeter");
        expect(controller.session?.beta_edges.length).toBe(5);
        const svg = renderSvg(controller.view!);
        expect((svg.match(/β/g) ?? []).length).toBe(5);
        const auto = fixture("auto_pappus.json") as { applied_steps: TraceStep[]; goal_reached: boolean };
        expect(auto.goal_reached).toBe(true);
        const entries = timeline(auto.applied_steps, auto.applied_steps.length);
        expect(entries.length).toBeGreaterThan(0);
        expect(entries.some((e) => e.badges.some((b) => b.includes("β-reduction")))).toBe(true);
        expect(entries.some((e) => e.badges.some((b) => b.includes("γ-reduction")))).toBe(true);
    });
});

describe("pure view derivations", () => {
    it("is a deterministic function of session and selection", () => {
        const session = (fixture("create_q3.json") as { session: SessionState }).session;
        const mcaps = fixture("mcaps_q3_1_3.json") as McapsPayload;
        const a = explorerView(session, mcaps.mcaps[0]);
        const b = explorerView(session, mcaps.mcaps[0]);
        expect(JSON.stringify(a)).toBe(JSON.stringify(b));
        expect(a.highlightedVertices.size).toBe(2);
        expect(a.edges.filter((e) => e.highlighted).length).toBe(mcaps.mcaps[0].edges.length);
        expect(a.edges.filter((e) => e.isBeta).length).toBe(2);
    });

    it("summaries compress runs", () => {
        const session = (fixture("create_q3.json") as { session: SessionState }).session;
        expect(summaryLine({ ...session.listing, totals: [5, 5, 5, 5] })).toBe("q3(5^4)");
        expect(summaryLine({ ...session.listing, totals: [12, 12, 13, 13], name: "des" })).toBe(
            "des(12^2,13^2)",
        );
    });

    it("circular layout follows the stored cycle with chords inside", () => {
        const session = (fixture("create_q3.json") as { session: SessionState }).session;
        const pos = layoutFor(session.graph, session.hamilton);
        for (const p of pos) {
            expect(Math.hypot(p.x, p.y)).toBeCloseTo(1, 6);
        }
        const first = session.hamilton![0];
        expect(pos[first].y).toBeCloseTo(-1, 6);
        // fallback layout stays inside the unit disc and is deterministic
        const f1 = layoutFor({ ...session.graph, name: "x" }, null);
        const f2 = layoutFor({ ...session.graph, name: "x" }, null);
        expect(JSON.stringify(f1)).toBe(JSON.stringify(f2));
        for (const p of f1) {
            expect(Math.hypot(p.x, p.y)).toBeLessThanOrEqual(1.0001);
        }
    });

    it("moves panel renders flips and selection", () => {
        const mcaps = fixture("mcaps_q3_1_3.json") as McapsPayload;
        const html = renderMoves(mcaps.mcaps, mcaps.flips, 0);
        expect(html).toContain("selected");
        expect(html).toContain("data-mcap=\"0\"");
    });
});

describe("load failures", () => {
    it("surfaces unknown catalog keys through the error callback", async () => {
        const { fetchFn } = scriptedFetch([
            { method: "POST", path: "/sessions", fixture: "swap_q3_stale.json", status: 404 },
        ]);
        const errors: string[] = [];
        const controller = new ExplorerController(new ApiClient("", fetchFn), {
            onError: (m) => errors.push(m),
        });
        await expect(controller.load("nope")).rejects.toBeInstanceOf(ApiError);
        expect(errors.length).toBe(1);
    });
});

describe("api error mapping", () => {
    it("exposes status and detail", async () => {
        const { fetchFn } = scriptedFetch([
            { method: "GET", path: "/catalog", fixture: "swap_q3_stale.json", status: 409 },
        ]);
        const api = new ApiClient("", fetchFn);
        await expect(api.catalog()).rejects.toMatchObject({ status: 409 });
        try {
            const { fetchFn: f2 } = scriptedFetch([
                { method: "GET", path: "/catalog", fixture: "swap_q3_stale.json", status: 409 },
            ]);
            await new ApiClient("", f2).catalog();
        } catch (err) {
            expect(err).toBeInstanceOf(ApiError);
            expect((err as ApiError).message).toContain("move rejected");
        }
    });
});
