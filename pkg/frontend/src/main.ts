// Browser wiring: one controller, one delegated click handler, re-render
// on every change.  Moves are applied strictly via the service; nothing is
// recolored locally.

import { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { renderListing, renderMoves, renderSvg, renderTimeline, lastStepBadges } from "./render.js";
import { timeline } from "./state.js";

const api = new ApiClient("");
const controller = new ExplorerController(api, {
    onChange: () => render(),
    onError: (message) => toast(message),
});

function el(id: string): HTMLElement {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
}

function toast(message: string): void {
    const box = el("toast");
    box.textContent = message;
    box.classList.add("visible");
    setTimeout(() => box.classList.remove("visible"), 4000);
}

async function boot(): Promise<void> {
    const cat = await api.catalog();
    const select = el("catalog-select") as HTMLSelectElement;
    select.innerHTML = cat.keys
        .filter((k) => cat.entries[k].has_pattern)
        .map((k) => `<option value="${k}">${k} (${cat.entries[k].n})</option>`)
        .join("");
    select.value = "q3";
    await controller.load(select.value);
    buildPairButtons();
}

function buildPairButtons(): void {
    if (!controller.session) return;
    const palette = controller.session.coloring.palette;
    const pairs: string[] = [];
    for (let a = 0; a < palette; a++) {
        for (let b = 0; b < palette; b++) {
            if (a !== b) pairs.push(`<button class="pair" data-pair="${a},${b}">${a}↔${b}</button>`);
        }
    }
    el("pairs").innerHTML = pairs.join("");
}

function render(): void {
    const view = controller.view;
    if (!view) return;
    el("canvas").innerHTML = renderSvg(view);
    el("listing").innerHTML = renderListing(view);
    el("moves").innerHTML = renderMoves(controller.mcaps.mcaps, controller.mcaps.flips, controller.highlightIndex);
    el("timeline").innerHTML = renderTimeline(
        timeline(controller.steps, controller.session?.cursor ?? controller.steps.length),
    );
    el("last-step").innerHTML = controller.lastStep ? lastStepBadges(controller.lastStep) : "";
    (el("undo") as HTMLButtonElement).disabled = !view.canUndo;
    (el("redo") as HTMLButtonElement).disabled = !view.canRedo;
    el("notice").textContent = controller.notice;
    if (controller.session) {
        (el("export-dot") as HTMLAnchorElement).href = api.exportUrl(controller.session.id, "dot");
        (el("export-json") as HTMLAnchorElement).href = api.exportUrl(controller.session.id, "json");
    }
}

document.addEventListener("click", async (event) => {
    const target = event.target as HTMLElement;
    try {
        if (target.matches("button.pair")) {
            const [a, b] = (target.dataset.pair ?? "0,1").split(",").map(Number);
            await controller.selectPair(a, b);
        } else if (target.matches("li.move.mcap")) {
            await controller.applyMcap(Number(target.dataset.mcap));
        } else if (target.matches("li.move.flip")) {
            await controller.applyFlip(Number(target.dataset.flip));
        } else if (target.id === "undo") {
            await controller.undo();
            await controller.refreshTrace();
            render();
        } else if (target.id === "redo") {
            await controller.redo();
        } else if (target.id === "auto") {
            const goal = (el("goal-select") as HTMLSelectElement).value;
            const steps = await controller.runAuto(goal);
            // animated playback: walk the cursor back, then replay forward
            for (let i = 0; i < steps.length; i++) await controller.undo();
            for (let i = 0; i < steps.length; i++) {
                await new Promise((resolve) => setTimeout(resolve, 350));
                await controller.redo();
            }
        }
    } catch {
        // controller surfaced the message already
    }
});

el("catalog-select").addEventListener("change", async (event) => {
    const key = (event.target as HTMLSelectElement).value;
    await controller.load(key);
    buildPairButtons();
});

boot().catch((err) => toast(String(err)));
