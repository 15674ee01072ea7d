import type { AnalysisReport, GameState } from "./api.js";
import { layoutFor, LayoutHint, Point } from "./layout.js";

/** Everything the renderer needs to draw one position. */
export interface BoardViewModel {
    layout: Point[];
    selected: number[];
    covered: number[];
    legal: number[];
    history: number[];
    analysis?: AnalysisReport;
}

const asc = (a: number, b: number) => a - b;

/**
 * Shape a raw API state for drawing.
 *
 * Display rule: a vertex is either filled (selected) or crossed (covered),
 * never both. The server already sends covered as closure-minus-selected,
 * but the subtraction is enforced again here so a buggy or foreign backend
 * cannot produce a vertex drawn both ways.
 */
export function buildBoard(state: GameState, hint?: LayoutHint, analysis?: AnalysisReport): BoardViewModel {
    const selected = new Set(state.selected);
    return {
        layout: layoutFor(state.n, state.edges, hint),
        selected: [...state.selected].sort(asc),
        covered: state.covered.filter(v => !selected.has(v)).sort(asc),
        legal: [...state.legal].sort(asc),
        history: [...state.history],
        analysis,
    };
}

/** The clickable set is exactly the server's legal list, except while the
 *  UI is locked (request in flight or engine to move), when it is empty. */
export function clickableVertices(vm: BoardViewModel, locked = false): number[] {
    return locked ? [] : [...vm.legal];
}
