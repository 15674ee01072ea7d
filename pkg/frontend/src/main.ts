// Page glue: wires the form controls to a GameController and paints the
// frames it emits. Everything game-related happens server-side; this file
// only moves JSON and SVG around.

import { GameApi } from "./api.js";
import { Frame, GameController } from "./play.js";
import { renderBoard } from "./render.js";
import type { LayoutHint } from "./layout.js";

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) {
        throw new Error(`missing element #${id}`);
    }
    return node as T;
}

const boardDiv = el<HTMLDivElement>("board");
const statusDiv = el<HTMLDivElement>("status");
const toastDiv = el<HTMLDivElement>("toast");
const baseInput = el<HTMLInputElement>("base-url");
const familySelect = el<HTMLSelectElement>("family");
const sizeInput = el<HTMLInputElement>("size");
const dimsInput = el<HTMLInputElement>("dims");
const seedInput = el<HTMLInputElement>("seed");
const modeSelect = el<HTMLSelectElement>("mode");
const engineFirstBox = el<HTMLInputElement>("engine-first");
const analysisBox = el<HTMLInputElement>("analysis");
const newGameBtn = el<HTMLButtonElement>("new-game");

let controller: GameController | null = null;
let toastTimer: number | undefined;

function showToast(message: string): void {
    toastDiv.textContent = message;
    toastDiv.classList.add("visible");
    window.clearTimeout(toastTimer);
    toastTimer = window.setTimeout(() => toastDiv.classList.remove("visible"), 2500);
}

function describe(frame: Frame): string {
    const s = frame.state;
    if (s.terminal) {
        return `move ${s.history.length}: game over`;
    }
    if (frame.note === "optimistic") {
        return "waiting for the server";
    }
    const turn = s.to_move === null ? "" : `${s.to_move} to move`;
    return `move ${s.history.length}, ${turn}`;
}

function paint(frame: Frame): void {
    boardDiv.innerHTML = renderBoard(frame.vm, frame.state, {
        clickable: frame.clickable,
        justPlayed: frame.justPlayed,
    });
    statusDiv.textContent = describe(frame);
    for (const g of boardDiv.querySelectorAll<SVGGElement>('g[data-clickable="true"]')) {
        const v = Number(g.dataset.vertex);
        g.addEventListener("click", () => {
            controller?.clickVertex(v).catch(err => showToast(String(err)));
        });
    }
}

function currentHint(): LayoutHint {
    const family = familySelect.value;
    const hint: LayoutHint = { family };
    if (family === "grid") {
        hint.dims = dimsInput.value.split(",").map(s => Number(s.trim())).filter(d => d > 0);
    }
    return hint;
}

async function startGame(): Promise<void> {
    const api = new GameApi(baseInput.value.trim());
    controller = new GameController(api, { onFrame: paint, onToast: showToast });
    controller.analysisOn = analysisBox.checked;

    const family = familySelect.value;
    const params: { name: string; n?: number; dims?: number[]; seed?: number } = { name: family };
    if (family === "grid") {
        params.dims = currentHint().dims;
    } else if (family !== "petersen") {
        params.n = Number(sizeInput.value);
    }
    if (family.startsWith("random-")) {
        params.seed = Number(seedInput.value);
    }
    try {
        await controller.newGame(
            {
                family: params,
                mode: modeSelect.value as "two-human" | "vs-engine",
                engine_first: engineFirstBox.checked,
            },
            currentHint(),
        );
    } catch (err) {
        showToast(`could not start a game: ${err}`);
    }
}

newGameBtn.addEventListener("click", () => { void startGame(); });
analysisBox.addEventListener("change", () => {
    void controller?.setAnalysis(analysisBox.checked).catch(err => showToast(String(err)));
});

void startGame();
