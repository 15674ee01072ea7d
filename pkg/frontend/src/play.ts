import {
    AnalysisReport,
    ApiError,
    CreateGameRequest,
    GameApiLike,
    GameState,
} from "./api.js";
import { BoardViewModel, buildBoard, clickableVertices } from "./board.js";
import type { LayoutHint } from "./layout.js";

/** One thing to draw. A human move followed by an engine reply arrives as
 *  two frames so the reply reads as its own move instead of teleporting in. */
export interface Frame {
    vm: BoardViewModel;
    state: GameState;
    clickable: number[];
    justPlayed?: number;
    note?: "optimistic" | "engine-reply";
}

export interface ControllerOptions {
    onFrame?: (frame: Frame) => void;
    onToast?: (message: string) => void;
    /** Pause before showing the engine's reply; tests pass 0. */
    engineReplyDelayMs?: number;
}

const sleep = (ms: number) => new Promise<void>(r => setTimeout(r, ms));

/**
 * Drives one game session: owns the current state, turns clicks into API
 * moves, and emits frames for the page to draw. Clicks on covered or
 * selected vertices are rejected locally; everything else is the server's
 * call, and a 409 just refreshes the board with a toast.
 */
export class GameController {
    state: GameState | null = null;
    hint?: LayoutHint;
    analysisOn = false;

    private analysis?: AnalysisReport;
    private busy = false;

    constructor(private api: GameApiLike, private opts: ControllerOptions = {}) {}

    /** Input is locked while a request is in flight or it is not a human's turn. */
    get locked(): boolean {
        if (this.busy) {
            return true;
        }
        const s = this.state;
        return s !== null && s.mode === "vs-engine" && !s.terminal && s.to_move !== "human";
    }

    private toast(message: string): void {
        this.opts.onToast?.(message);
    }

    private emit(state: GameState, note?: Frame["note"], justPlayed?: number): Frame {
        const vm = buildBoard(state, this.hint, this.analysisOn ? this.analysis : undefined);
        const frame: Frame = {
            vm,
            state,
            clickable: clickableVertices(vm, note === "optimistic" || this.locked),
            justPlayed,
            note,
        };
        this.opts.onFrame?.(frame);
        return frame;
    }

    private async refreshAnalysis(): Promise<void> {
        const s = this.state;
        if (!this.analysisOn || !s || s.terminal) {
            this.analysis = undefined;
            return;
        }
        this.analysis = await this.api.getAnalysis(s.id);
    }

    async newGame(req: CreateGameRequest, hint?: LayoutHint): Promise<Frame> {
        this.busy = true;
        try {
            this.state = await this.api.createGame(req);
            this.hint = hint;
            await this.refreshAnalysis();
        } finally {
            this.busy = false;
        }
        return this.emit(this.state);
    }

    async setAnalysis(on: boolean): Promise<Frame | null> {
        this.analysisOn = on;
        if (!this.state) {
            return null;
        }
        await this.refreshAnalysis();
        return this.emit(this.state);
    }

    /**
     * Handle a click on a vertex. Returns the frames that were drawn, in
     * order; an empty array means the click was rejected without a request.
     */
    async clickVertex(vertex: number): Promise<Frame[]> {
        const s = this.state;
        if (!s) {
            return [];
        }
        if (this.locked) {
            this.toast("hold on, a move is already in flight");
            return [];
        }
        if (s.terminal) {
            this.toast("the game is over");
            return [];
        }
        if (s.selected.includes(vertex) || s.covered.includes(vertex)) {
            this.toast(`vertex ${vertex} is already covered`);
            return [];
        }
        if (!s.legal.includes(vertex)) {
            this.toast(`vertex ${vertex} is not a legal move`);
            return [];
        }

        const frames: Frame[] = [];
        this.busy = true;
        try {
            // optimistic frame: show the pick immediately, highlights off
            const optimistic: GameState = {
                ...s,
                history: [...s.history, vertex],
                selected: [...s.selected, vertex].sort((a, b) => a - b),
                legal: [],
            };
            frames.push(this.emit(optimistic, "optimistic", vertex));

            let next: GameState;
            try {
                next = await this.api.postMove(s.id, vertex);
            } catch (err) {
                if (err instanceof ApiError && err.status === 409) {
                    this.toast(`move rejected: ${err.message}`);
                    next = await this.api.getGame(s.id);
                    this.state = next;
                    this.busy = false;
                    frames.push(this.emit(next));
                    return frames;
                }
                throw err;
            }

            this.state = next;
            await this.refreshAnalysis();
            const reply = next.engine_move;
            this.busy = false;
            if (next.mode === "vs-engine" && reply !== null && reply !== undefined) {
                // the engine answered within the same request; draw it as
                // a second move after a beat
                await sleep(this.opts.engineReplyDelayMs ?? 350);
                frames.push(this.emit(next, "engine-reply", reply));
            } else {
                frames.push(this.emit(next));
            }
        } finally {
            this.busy = false;
        }
        return frames;
    }
}
