import type { QuiverJson, SessionState } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Point[]; // position of vertex id i+1 at index i

const CELL = 110;
const MARGIN = 60;

/**
 * Grid layout for Grassmannian presets: vertex ids are drawn-row-major over a
 * (k-1) x (n-k-1) grid, top row first, matching the usual seed pictures
 * (diagonals come out southwest automatically).
 */
export function gridLayout(k: number, n: number, numVertices: number): Layout {
  const cols = n - k - 1;
  const points: Layout = [];
  for (let i = 0; i < numVertices; i++) {
    const row = Math.floor(i / cols);
    const col = i % cols;
    points.push({ x: MARGIN + col * CELL, y: MARGIN + row * CELL });
  }
  return points;
}

/**
 * Deterministic force-directed layout for custom quivers: vertices start on a
 * circle and relax under spring forces along arrows plus pairwise repulsion.
 * No randomness, so the result is stable for snapshots.
 */
export function forceLayout(quiver: QuiverJson, iterations = 120): Layout {
  const m = quiver.num_vertices;
  const radius = Math.max(80, 28 * m);
  const points: Layout = [];
  for (let i = 0; i < m; i++) {
    const angle = (2 * Math.PI * i) / m - Math.PI / 2;
    points.push({
      x: radius + radius * Math.cos(angle),
      y: radius + radius * Math.sin(angle),
    });
  }
  if (m === 1) return points;
  const ideal = CELL;
  for (let step = 0; step < iterations; step++) {
    const fx = new Array<number>(m).fill(0);
    const fy = new Array<number>(m).fill(0);
    for (let i = 0; i < m; i++) {
      for (let j = i + 1; j < m; j++) {
        const dx = points[i].x - points[j].x;
        const dy = points[i].y - points[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = (ideal * ideal) / d2;
        const d = Math.sqrt(d2);
        fx[i] += (dx / d) * push;
        fy[i] += (dy / d) * push;
        fx[j] -= (dx / d) * push;
        fy[j] -= (dy / d) * push;
      }
    }
    for (const [s, t] of quiver.arrows) {
      const a = s - 1;
      const b = t - 1;
      const dx = points[b].x - points[a].x;
      const dy = points[b].y - points[a].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - ideal) / d / 12;
      fx[a] += dx * pull;
      fy[a] += dy * pull;
      fx[b] -= dx * pull;
      fy[b] -= dy * pull;
    }
    const damp = 0.5 * (1 - step / iterations) + 0.05;
    for (let i = 0; i < m; i++) {
      points[i].x += fx[i] * damp;
      points[i].y += fy[i] * damp;
    }
  }
  // normalize into the positive quadrant with a margin
  const minX = Math.min(...points.map((p) => p.x));
  const minY = Math.min(...points.map((p) => p.y));
  return points.map((p) => ({
    x: Math.round(p.x - minX + MARGIN),
    y: Math.round(p.y - minY + MARGIN),
  }));
}

export function layoutFor(state: SessionState): Layout {
  if (state.preset) {
    return gridLayout(state.preset.k, state.preset.n, state.quiver.num_vertices);
  }
  return forceLayout(state.quiver);
}
