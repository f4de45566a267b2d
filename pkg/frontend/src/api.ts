// Thin typed client over the session service.  All validity decisions stay
// server-side; the client only transports JSON.

import type {
    AutoResponse,
    CatalogPayload,
    McapsPayload,
    MutationResponse,
    SessionState,
    TracePayload,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
    constructor(
        public status: number,
        message: string,
        public detail?: unknown,
    ) {
        super(message);
    }
}

export class ApiClient {
    constructor(
        private base: string = "",
        private fetchFn: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const init: RequestInit = { method };
        if (body !== undefined) {
            init.body = JSON.stringify(body);
            init.headers = { "content-type": "application/json" };
        }
        const resp = await this.fetchFn(this.base + path, init);
        const text = await resp.text();
        let payload: unknown = null;
        try {
            payload = text ? JSON.parse(text) : null;
        } catch {
            payload = text;
        }
        if (!resp.ok) {
            const message =
                payload && typeof payload === "object" && "error" in (payload as object)
                    ? String((payload as { error: unknown }).error)
                    : `request failed (${resp.status})`;
            const detail =
                payload && typeof payload === "object" && "detail" in (payload as object)
                    ? (payload as { detail: unknown }).detail
                    : undefined;
            throw new ApiError(resp.status, message, detail);
        }
        return payload as T;
    }

    catalog(): Promise<CatalogPayload> {
        return this.request("GET", "/catalog");
    }

    async createSession(body: Record<string, unknown>): Promise<SessionState> {
        const out = await this.request<{ session: SessionState }>("POST", "/sessions", body);
        return out.session;
    }

    async session(id: string): Promise<SessionState> {
        const out = await this.request<{ session: SessionState }>("GET", `/sessions/${id}`);
        return out.session;
    }

    mcaps(id: string, c0?: number, c1?: number): Promise<McapsPayload> {
        const query = c0 !== undefined && c1 !== undefined ? `?c0=${c0}&c1=${c1}` : "";
        return this.request("GET", `/sessions/${id}/mcaps${query}`);
    }

    swap(id: string, vertices: number[], colors: number[]): Promise<MutationResponse> {
        return this.request("POST", `/sessions/${id}/swap`, { vertices, colors });
    }

    flip(id: string, edge: number): Promise<MutationResponse> {
        return this.request("POST", `/sessions/${id}/flip`, { edge });
    }

    undo(id: string): Promise<MutationResponse> {
        return this.request("POST", `/sessions/${id}/undo`, {});
    }

    redo(id: string): Promise<MutationResponse> {
        return this.request("POST", `/sessions/${id}/redo`, {});
    }

    auto(id: string, goal: string, budget?: { nodes?: number; steps?: number }): Promise<AutoResponse> {
        return this.request("POST", `/sessions/${id}/auto`, { goal, budget });
    }

    trace(id: string): Promise<TracePayload> {
        return this.request("GET", `/sessions/${id}/trace`);
    }

    exportUrl(id: string, format: "dot" | "json"): string {
        return `${this.base}/sessions/${id}/export?format=${format}`;
    }
}
