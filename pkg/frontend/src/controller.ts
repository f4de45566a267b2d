// Session-driving state machine.  Every move round-trips the service and
// replaces the local session snapshot with the server's; the view is then
// a pure function of (session, selection), so replaying the same inputs
// always reproduces the same UI state.

import { ApiClient, ApiError } from "./api.js";
import { explorerView, ViewState } from "./state.js";
import type { McapJson, McapsPayload, SessionState, TraceStep } from "./types.js";

export interface ControllerEvents {
    onChange?: () => void;
    onError?: (message: string) => void;
}

export class ExplorerController {
    session: SessionState | null = null;
    mcaps: McapsPayload = { mcaps: [], flips: [] };
    pair: [number, number] | null = null;
    highlightIndex: number | null = null;
    lastStep: TraceStep | null = null;
    steps: TraceStep[] = [];
    notice = "";

    constructor(
        private api: ApiClient,
        private events: ControllerEvents = {},
    ) {}

    get view(): ViewState | null {
        if (!this.session) return null;
        return explorerView(this.session, this.highlightedMcap);
    }

    get highlightedMcap(): McapJson | null {
        if (this.highlightIndex === null) return null;
        return this.mcaps.mcaps[this.highlightIndex] ?? null;
    }

    private changed() {
        this.events.onChange?.();
    }

    private fail(err: unknown): never {
        const message = err instanceof Error ? err.message : String(err);
        this.events.onError?.(message);
        throw err;
    }

    async load(catalogKey: string, pattern: string | null = "catalog"): Promise<void> {
        try {
            const body: Record<string, unknown> = { catalog: catalogKey };
            if (pattern) body.pattern = pattern;
            this.session = await this.api.createSession(body);
            this.pair = null;
            this.mcaps = { mcaps: [], flips: [] };
            this.highlightIndex = null;
            this.lastStep = null;
            this.steps = [];
            this.notice = "";
            this.changed();
        } catch (err) {
            this.fail(err);
        }
    }

    async selectPair(c0: number, c1: number): Promise<void> {
        if (!this.session) throw new Error("no session");
        try {
            this.pair = [c0, c1];
            this.mcaps = await this.api.mcaps(this.session.id, c0, c1);
            this.highlightIndex = this.mcaps.mcaps.length ? 0 : null;
            this.changed();
        } catch (err) {
            this.fail(err);
        }
    }

    highlight(index: number): void {
        this.highlightIndex = index;
        this.changed();
    }

    private async refreshAfterConflict(): Promise<void> {
        if (!this.session) return;
        this.session = await this.api.session(this.session.id);
        if (this.pair) {
            this.mcaps = await this.api.mcaps(this.session.id, this.pair[0], this.pair[1]);
            this.highlightIndex = this.mcaps.mcaps.length ? 0 : null;
        }
    }

    private async applyMutation(fn: () => Promise<{ session: SessionState; last_step: TraceStep | null }>): Promise<void> {
        if (!this.session) throw new Error("no session");
        try {
            const out = await fn();
            this.session = out.session;
            this.lastStep = out.last_step;
            await this.refreshMoves();
            this.notice = "";
            this.changed();
        } catch (err) {
            if (err instanceof ApiError && err.status === 409) {
                this.notice = "stale path; refreshed";
                await this.refreshAfterConflict();
                this.changed();
                return;
            }
            this.fail(err);
        }
    }

    private async refreshMoves(): Promise<void> {
        if (!this.session || !this.pair) return;
        this.mcaps = await this.api.mcaps(this.session.id, this.pair[0], this.pair[1]);
        this.highlightIndex = this.mcaps.mcaps.length ? 0 : null;
    }

    async applyMcap(index: number): Promise<void> {
        const pick = this.mcaps.mcaps[index];
        if (!pick || !this.session) throw new Error("no such path");
        const id = this.session.id;
        await this.applyMutation(() => this.api.swap(id, pick.vertices, pick.colors));
        if (this.lastStep) this.steps = [...this.steps.slice(0, (this.session as SessionState).cursor - 1), this.lastStep];
    }

    async applyFlip(edge: number): Promise<void> {
        if (!this.session) throw new Error("no session");
        const id = this.session.id;
        await this.applyMutation(() => this.api.flip(id, edge));
    }

    async undo(): Promise<void> {
        if (!this.session) throw new Error("no session");
        const id = this.session.id;
        await this.applyMutation(() => this.api.undo(id));
    }

    async redo(): Promise<void> {
        if (!this.session) throw new Error("no session");
        const id = this.session.id;
        await this.applyMutation(() => this.api.redo(id));
    }

    async runAuto(goal: string, nodes = 100000): Promise<TraceStep[]> {
        if (!this.session) throw new Error("no session");
        try {
            const out = await this.api.auto(this.session.id, goal, { nodes });
            this.session = out.session;
            this.steps = [...this.steps, ...out.applied_steps];
            this.changed();
            return out.applied_steps;
        } catch (err) {
            this.fail(err);
        }
    }

    async refreshTrace(): Promise<TraceStep[]> {
        if (!this.session) throw new Error("no session");
        const tr = await this.api.trace(this.session.id);
        this.steps = tr.steps;
        return tr.steps;
    }
}
