// HTTP client for the game service. All game state lives server-side;
// this module only shapes requests and decodes responses.

export interface FamilySpec {
    name: string;
    n?: number;
    m?: number;
    dims?: number[];
    seed?: number;
}

export type GameMode = "two-human" | "vs-engine";

export interface CreateGameRequest {
    family?: FamilySpec;
    text?: string;
    n?: number;
    edges?: [number, number][];
    mode?: GameMode;
    engine_first?: boolean;
}

export interface GameState {
    id: string;
    mode: GameMode;
    engine_first: boolean;
    history: number[];
    n: number;
    edges: [number, number][];
    selected: number[];
    covered: number[];
    legal: number[];
    to_move: string | null;
    terminal: boolean;
    winner: string | null;
    // present on move responses; null in two-human games
    engine_move?: number | null;
}

export interface AnalysisOption {
    vertex: number;
    grundy: number;
}

export interface AnalysisReport {
    grundy: number;
    outcome: "N" | "P";
    options: AnalysisOption[];
    best_move: number | null;
}

export class ApiError extends Error {
    constructor(public status: number, message: string) {
        super(message);
        this.name = "ApiError";
    }
}

/** The slice of the service the board needs; tests substitute a stub. */
export interface GameApiLike {
    createGame(req: CreateGameRequest): Promise<GameState>;
    getGame(id: string): Promise<GameState>;
    postMove(id: string, vertex: number): Promise<GameState>;
    getAnalysis(id: string): Promise<AnalysisReport>;
    deleteGame(id: string): Promise<void>;
}

export class GameApi implements GameApiLike {
    constructor(private baseUrl: string) {
        // tolerate a trailing slash in pasted base URLs
        this.baseUrl = baseUrl.replace(/\/+$/, "");
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const resp = await fetch(this.baseUrl + path, {
            method,
            headers: body === undefined ? undefined : { "content-type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        if (!resp.ok) {
            let detail = `${resp.status} ${resp.statusText}`;
            try {
                const payload = await resp.json();
                if (typeof payload?.detail === "string") {
                    detail = payload.detail;
                } else if (payload?.detail !== undefined) {
                    // validation errors arrive as a list of objects
                    detail = JSON.stringify(payload.detail);
                }
            } catch {
                // non-JSON error body, keep the status line
            }
            throw new ApiError(resp.status, detail);
        }
        if (resp.status === 204) {
            return undefined as T;
        }
        return await resp.json() as T;
    }

    createGame(req: CreateGameRequest): Promise<GameState> {
        return this.request<GameState>("POST", "/games", req);
    }

    getGame(id: string): Promise<GameState> {
        return this.request<GameState>("GET", `/games/${id}`);
    }

    postMove(id: string, vertex: number): Promise<GameState> {
        return this.request<GameState>("POST", `/games/${id}/moves`, { vertex });
    }

    getAnalysis(id: string): Promise<AnalysisReport> {
        return this.request<AnalysisReport>("GET", `/games/${id}/analysis`);
    }

    deleteGame(id: string): Promise<void> {
        return this.request<void>("DELETE", `/games/${id}`);
    }
}
