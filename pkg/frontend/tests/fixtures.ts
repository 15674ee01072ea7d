// Service payloads recorded from a live `geodex serve` instance. The stub
// replays these verbatim so contract tests exercise the exact JSON the
// backend produces, not a hand-written approximation of it.

import type { AnalysisReport, GameState } from "../src/api.js";

export const c5Fresh: GameState = {
    id: "b04c9616f2904cf48f9b9a7d74650221", mode: "two-human", engine_first: false,
    history: [], n: 5, edges: [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]],
    selected: [], covered: [], legal: [0, 1, 2, 3, 4],
    to_move: "first", terminal: false, winner: null,
};

export const p4Script: GameState[] = [
    {
        id: "419a3b74e139472d9a2a005824714feb", mode: "two-human", engine_first: false,
        history: [], n: 4, edges: [[0, 1], [1, 2], [2, 3]],
        selected: [], covered: [], legal: [0, 1, 2, 3],
        to_move: "first", terminal: false, winner: null,
    },
    {
        id: "419a3b74e139472d9a2a005824714feb", mode: "two-human", engine_first: false,
        history: [0], n: 4, edges: [[0, 1], [1, 2], [2, 3]],
        selected: [0], covered: [], legal: [1, 2, 3],
        to_move: "second", terminal: false, winner: null, engine_move: null,
    },
    {
        id: "419a3b74e139472d9a2a005824714feb", mode: "two-human", engine_first: false,
        history: [0, 3], n: 4, edges: [[0, 1], [1, 2], [2, 3]],
        selected: [0, 3], covered: [1, 2], legal: [],
        to_move: null, terminal: true, winner: "second", engine_move: null,
    },
];

export const p4Terminal: GameState = p4Script[2];

export const c6EngineScript: GameState[] = [
    {
        id: "3298469cb6ad42bd9084432e3228d191", mode: "vs-engine", engine_first: false,
        history: [], n: 6, edges: [[0, 1], [0, 5], [1, 2], [2, 3], [3, 4], [4, 5]],
        selected: [], covered: [], legal: [0, 1, 2, 3, 4, 5],
        to_move: "human", terminal: false, winner: null,
    },
    {
        id: "3298469cb6ad42bd9084432e3228d191", mode: "vs-engine", engine_first: false,
        history: [0, 3], n: 6, edges: [[0, 1], [0, 5], [1, 2], [2, 3], [3, 4], [4, 5]],
        selected: [0, 3], covered: [1, 2, 4, 5], legal: [],
        to_move: null, terminal: true, winner: "engine", engine_move: 3,
    },
];

// two-human C6 after moves 0 and 2: one covered vertex, game still running
export const c6MidGame: GameState = {
    id: "7d1d70debd744ed1be2c6a1bc6683ec0", mode: "two-human", engine_first: false,
    history: [0, 2], n: 6, edges: [[0, 1], [0, 5], [1, 2], [2, 3], [3, 4], [4, 5]],
    selected: [0, 2], covered: [1], legal: [3, 4, 5],
    to_move: "first", terminal: false, winner: null, engine_move: null,
};

export const cactusScript: GameState[] = [
    {
        id: "f27d544707714a35a42eef808ef1f551", mode: "two-human", engine_first: false,
        history: [], n: 10,
        edges: [[0, 1], [0, 3], [1, 2], [1, 9], [2, 3], [2, 4], [2, 8], [4, 5], [5, 6], [6, 7], [7, 8]],
        selected: [], covered: [], legal: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
        to_move: "first", terminal: false, winner: null,
    },
    {
        id: "f27d544707714a35a42eef808ef1f551", mode: "two-human", engine_first: false,
        history: [2], n: 10,
        edges: [[0, 1], [0, 3], [1, 2], [1, 9], [2, 3], [2, 4], [2, 8], [4, 5], [5, 6], [6, 7], [7, 8]],
        selected: [2], covered: [], legal: [0, 1, 3, 4, 5, 6, 7, 8, 9],
        to_move: "second", terminal: false, winner: null, engine_move: null,
    },
];

// Mirrors the create-response shape above; only this one was not captured
// verbatim from the wire.
export const p5Fresh: GameState = {
    id: "p5fresh00000000000000000000000000", mode: "two-human", engine_first: false,
    history: [], n: 5, edges: [[0, 1], [1, 2], [2, 3], [3, 4]],
    selected: [], covered: [], legal: [0, 1, 2, 3, 4],
    to_move: "first", terminal: false, winner: null,
};

export const p5Analysis: AnalysisReport = {
    grundy: 1,
    outcome: "N",
    options: [
        { vertex: 0, grundy: 4 },
        { vertex: 1, grundy: 2 },
        { vertex: 2, grundy: 0 },
        { vertex: 3, grundy: 2 },
        { vertex: 4, grundy: 4 },
    ],
    best_move: 2,
};

export const allFixtureStates: GameState[] = [
    c5Fresh,
    ...p4Script,
    ...c6EngineScript,
    c6MidGame,
    ...cactusScript,
    p5Fresh,
];
