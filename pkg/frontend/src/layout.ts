// Vertex placement. Family presets get the tidy layout their name implies
// (circle for cycles, a line for paths, rows for grids); anything else goes
// through a small seeded force simulation so the same graph always lands in
// the same spot across reloads.

export interface Point {
    x: number;
    y: number;
}

/** What the client knows about how the game was created. The API state
 *  carries no family field, so this hint travels from the creation form. */
export interface LayoutHint {
    family?: string;
    dims?: number[];
}

export const BOARD_SIZE = 520;
const MARGIN = 56;

export function circleLayout(n: number): Point[] {
    const c = BOARD_SIZE / 2;
    if (n === 1) {
        return [{ x: c, y: c }];
    }
    const r = c - MARGIN;
    const pts: Point[] = [];
    for (let v = 0; v < n; v++) {
        const a = -Math.PI / 2 + (2 * Math.PI * v) / n;
        pts.push({ x: c + r * Math.cos(a), y: c + r * Math.sin(a) });
    }
    return pts;
}

export function lineLayout(n: number): Point[] {
    const y = BOARD_SIZE / 2;
    if (n === 1) {
        return [{ x: BOARD_SIZE / 2, y }];
    }
    const step = (BOARD_SIZE - 2 * MARGIN) / (n - 1);
    const pts: Point[] = [];
    for (let v = 0; v < n; v++) {
        pts.push({ x: MARGIN + v * step, y });
    }
    return pts;
}

/** Grid products number vertices in row-major order: id = row * cols + col. */
export function gridLayout(rows: number, cols: number): Point[] {
    const xs = cols === 1
        ? [BOARD_SIZE / 2]
        : Array.from({ length: cols }, (_, c) => MARGIN + (c * (BOARD_SIZE - 2 * MARGIN)) / (cols - 1));
    const ys = rows === 1
        ? [BOARD_SIZE / 2]
        : Array.from({ length: rows }, (_, r) => MARGIN + (r * (BOARD_SIZE - 2 * MARGIN)) / (rows - 1));
    const pts: Point[] = [];
    for (let r = 0; r < rows; r++) {
        for (let c = 0; c < cols; c++) {
            pts.push({ x: xs[c], y: ys[r] });
        }
    }
    return pts;
}

// Deterministic 32-bit PRNG (mulberry32). d3-force was the obvious choice
// here but its overlap jiggle calls Math.random, which breaks the promise
// that a layout is reproducible, so the simulation below is hand rolled.
function makeRng(seed: number): () => number {
    let a = seed >>> 0;
    return () => {
        a = (a + 0x6d2b79f5) >>> 0;
        let t = a;
        t = Math.imul(t ^ (t >>> 15), t | 1);
        t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}

/**
 * Spring-and-repulsion layout with seeded initial positions. Runs a fixed
 * number of cooling iterations and rescales the result into the board box,
 * so equal (n, edges, seed) inputs give identical coordinates.
 */
export function forceLayout(n: number, edges: [number, number][], seed = 1): Point[] {
    if (n === 0) {
        return [];
    }
    if (n === 1) {
        return [{ x: BOARD_SIZE / 2, y: BOARD_SIZE / 2 }];
    }
    const rng = makeRng(seed * 2654435761 + n);
    const px = new Array<number>(n);
    const py = new Array<number>(n);
    for (let v = 0; v < n; v++) {
        px[v] = BOARD_SIZE * (0.25 + 0.5 * rng());
        py[v] = BOARD_SIZE * (0.25 + 0.5 * rng());
    }

    const area = BOARD_SIZE * BOARD_SIZE;
    const k = Math.sqrt(area / n);
    let temp = BOARD_SIZE / 8;
    const iterations = 250;

    for (let it = 0; it < iterations; it++) {
        const dx = new Array<number>(n).fill(0);
        const dy = new Array<number>(n).fill(0);

        // pairwise repulsion
        for (let u = 0; u < n; u++) {
            for (let v = u + 1; v < n; v++) {
                let ddx = px[u] - px[v];
                let ddy = py[u] - py[v];
                let d2 = ddx * ddx + ddy * ddy;
                if (d2 < 1e-6) {
                    // coincident points: nudge apart deterministically
                    ddx = 0.01 * (u - v);
                    ddy = 0.01;
                    d2 = ddx * ddx + ddy * ddy;
                }
                const f = (k * k) / d2;
                dx[u] += ddx * f * 0.01;
                dy[u] += ddy * f * 0.01;
                dx[v] -= ddx * f * 0.01;
                dy[v] -= ddy * f * 0.01;
            }
        }

        // spring attraction along edges
        for (const [u, v] of edges) {
            const ddx = px[u] - px[v];
            const ddy = py[u] - py[v];
            const d = Math.sqrt(ddx * ddx + ddy * ddy) || 1e-3;
            const f = (d * d) / k / d;
            dx[u] -= ddx * f * 0.05;
            dy[u] -= ddy * f * 0.05;
            dx[v] += ddx * f * 0.05;
            dy[v] += ddy * f * 0.05;
        }

        for (let v = 0; v < n; v++) {
            const d = Math.sqrt(dx[v] * dx[v] + dy[v] * dy[v]);
            if (d > 0) {
                const step = Math.min(d, temp);
                px[v] += (dx[v] / d) * step;
                py[v] += (dy[v] / d) * step;
            }
        }
        temp *= 0.97;
    }

    // rescale into the board box, preserving aspect
    let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
    for (let v = 0; v < n; v++) {
        minX = Math.min(minX, px[v]);
        maxX = Math.max(maxX, px[v]);
        minY = Math.min(minY, py[v]);
        maxY = Math.max(maxY, py[v]);
    }
    const span = Math.max(maxX - minX, maxY - minY, 1e-6);
    const scale = (BOARD_SIZE - 2 * MARGIN) / span;
    const offX = (BOARD_SIZE - (maxX - minX) * scale) / 2;
    const offY = (BOARD_SIZE - (maxY - minY) * scale) / 2;
    return Array.from({ length: n }, (_, v) => ({
        x: offX + (px[v] - minX) * scale,
        y: offY + (py[v] - minY) * scale,
    }));
}

/** Pick a layout for a board: family-aware when a hint is present,
 *  seeded force-directed otherwise. */
export function layoutFor(n: number, edges: [number, number][], hint?: LayoutHint): Point[] {
    switch (hint?.family) {
        case "cycle":
            return circleLayout(n);
        case "path":
            return lineLayout(n);
        case "star":
            // center first, leaves around it
            if (n <= 2) {
                return lineLayout(n);
            }
            return [{ x: BOARD_SIZE / 2, y: BOARD_SIZE / 2 }, ...circleLayout(n - 1)];
        case "grid": {
            const dims = (hint.dims ?? []).filter(d => d > 1);
            if (dims.length === 1) {
                return lineLayout(n);
            }
            if (dims.length === 2 && dims[0] * dims[1] === n) {
                return gridLayout(dims[0], dims[1]);
            }
            break; // higher-dimensional products read better force-directed
        }
    }
    return forceLayout(n, edges);
}
