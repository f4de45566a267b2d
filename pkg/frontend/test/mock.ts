// Strictly scripted fetch mock: each request must match the next expected
// (method, path) pair and is answered with a captured service fixture, so
// the tests double as a contract check on the exact calls the UI makes.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import type { FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture(name: string): unknown {
    return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8"));
}

export interface ScriptEntry {
    method: string;
    path: string;
    fixture: string;
    status?: number;
}

export function scriptedFetch(script: ScriptEntry[]): { fetchFn: FetchLike; remaining: () => number } {
    let index = 0;
    const fetchFn: FetchLike = async (input, init) => {
        const method = init?.method ?? "GET";
        const expected = script[index];
        if (!expected) {
            throw new Error(`unexpected request ${method} ${input}`);
        }
        if (expected.method !== method || expected.path !== input) {
            throw new Error(
                `request ${index}: got ${method} ${input}, expected ${expected.method} ${expected.path}`,
            );
        }
        index += 1;
        const body = JSON.stringify(fixture(expected.fixture));
        return new Response(body, {
            status: expected.status ?? (method === "POST" && expected.path === "/sessions" ? 201 : 200),
            headers: { "content-type": "application/json" },
        });
    };
    return { fetchFn, remaining: () => script.length - index };
}
