import type { GameState } from "./api.js";
import type { BoardViewModel } from "./board.js";
import { BOARD_SIZE, circleLayout, Point } from "./layout.js";

const VERTEX_R = 15;

export interface RenderOptions {
    /** Vertices that respond to clicks. Defaults to the legal list. */
    clickable?: number[];
    /** Vertex to pulse, e.g. the engine's reply. */
    justPlayed?: number;
}

function esc(s: string): string {
    return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function winnerLabel(state: GameState): string {
    switch (state.winner) {
        case "engine": return "the engine wins";
        case "human": return "you win";
        case "first": return "first player wins";
        case "second": return "second player wins";
        default: return "game over";
    }
}

/**
 * Draw one position as an SVG string: filled markers for selected vertices,
 * crossed markers for covered ones, a highlight halo on every legal vertex,
 * and a banner with the winner once the game is over. Falls back to a
 * circular embedding when the view model has no usable layout.
 */
export function renderBoard(vm: BoardViewModel, state: GameState, opts: RenderOptions = {}): string {
    const layout: Point[] = vm.layout.length === state.n ? vm.layout : circleLayout(state.n);
    const clickable = new Set(opts.clickable ?? vm.legal);
    const selected = new Set(vm.selected);
    const covered = new Set(vm.covered);
    const legal = new Set(vm.legal);
    const optionValue = new Map<number, number>();
    if (vm.analysis) {
        for (const opt of vm.analysis.options) {
            optionValue.set(opt.vertex, opt.grundy);
        }
    }

    const parts: string[] = [];
    parts.push(
        `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${BOARD_SIZE} ${BOARD_SIZE}" class="board">`,
    );

    for (const [u, v] of state.edges) {
        const a = layout[u];
        const b = layout[v];
        parts.push(
            `<line class="edge" x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}"` +
            ` x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"/>`,
        );
    }

    for (let v = 0; v < state.n; v++) {
        const p = layout[v];
        const classes = ["vertex"];
        if (selected.has(v)) classes.push("selected");
        if (covered.has(v)) classes.push("covered");
        if (legal.has(v)) classes.push("legal");
        if (opts.justPlayed === v) classes.push("just-played");

        const attrs = clickable.has(v) ? ` data-clickable="true"` : "";
        parts.push(`<g class="${classes.join(" ")}" data-vertex="${v}"${attrs}>`);
        if (legal.has(v)) {
            parts.push(`<circle class="halo" cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${VERTEX_R + 6}"/>`);
        }
        const fill = selected.has(v) ? "#1a1a1a" : "#ffffff";
        parts.push(
            `<circle class="disc" cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${VERTEX_R}"` +
            ` fill="${fill}" stroke="#444"/>`,
        );
        if (covered.has(v)) {
            // the cross mark for closure vertices that were never picked
            const d = VERTEX_R * 0.62;
            parts.push(
                `<line class="cross" x1="${(p.x - d).toFixed(1)}" y1="${(p.y - d).toFixed(1)}"` +
                ` x2="${(p.x + d).toFixed(1)}" y2="${(p.y + d).toFixed(1)}"/>`,
                `<line class="cross" x1="${(p.x - d).toFixed(1)}" y1="${(p.y + d).toFixed(1)}"` +
                ` x2="${(p.x + d).toFixed(1)}" y2="${(p.y - d).toFixed(1)}"/>`,
            );
        }
        const labelFill = selected.has(v) ? "#ffffff" : "#333";
        parts.push(
            `<text class="label" x="${p.x.toFixed(1)}" y="${(p.y + 4.5).toFixed(1)}"` +
            ` text-anchor="middle" fill="${labelFill}">${v}</text>`,
        );
        if (optionValue.has(v) && legal.has(v)) {
            parts.push(
                `<text class="option-value" x="${(p.x + VERTEX_R + 8).toFixed(1)}"` +
                ` y="${(p.y - VERTEX_R).toFixed(1)}">*${optionValue.get(v)}</text>`,
            );
        }
        parts.push("</g>");
    }

    if (state.terminal) {
        parts.push(
            `<text class="banner" x="${BOARD_SIZE / 2}" y="30" text-anchor="middle">` +
            `game over: ${esc(winnerLabel(state))}</text>`,
        );
    }

    parts.push("</svg>");
    return parts.join("\n");
}

/** Parse the clickable vertex ids back out of a rendered board. */
export function clickableFromSvg(svg: string): number[] {
    const out: number[] = [];
    const re = /data-vertex="(\d+)" data-clickable="true"/g;
    let m: RegExpExecArray | null;
    while ((m = re.exec(svg)) !== null) {
        out.push(Number(m[1]));
    }
    return out.sort((a, b) => a - b);
}
