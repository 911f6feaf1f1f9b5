/**
 * Captured server payloads (ids pinned for stable snapshots): an A3 custom
 * session before and after mutating vertex 1, and a Gr(3,6) grid preset
 * after its 6-step reddening sweep.
 */

import type { SessionState } from "../src/types.js";

export const a3Initial: SessionState = {
  id: "fixture-a3",
  preset: null,
  quiver: {
    num_vertices: 3,
    num_mutable: 3,
    arrows: [
      [1, 2],
      [2, 3],
    ],
  },
  colors: ["green", "green", "green"],
  g_matrix: [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
  ],
  c_matrix: [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
  ],
  f_polys: ["1", "1", "1"],
  history: [],
  all_red: false,
  sigma: null,
  undo_depth: 0,
};

export const a3AfterOne: SessionState = {
  id: "fixture-a3",
  preset: null,
  quiver: {
    num_vertices: 3,
    num_mutable: 3,
    arrows: [
      [2, 1],
      [2, 3],
    ],
  },
  colors: ["red", "green", "green"],
  g_matrix: [
    [-1, 1, 0],
    [0, 1, 0],
    [0, 0, 1],
  ],
  c_matrix: [
    [-1, 0, 0],
    [1, 1, 0],
    [0, 0, 1],
  ],
  f_polys: ["1 + y1", "1", "1"],
  history: [1],
  all_red: false,
  sigma: null,
  undo_depth: 1,
};

export const grid36Final: SessionState = {
  id: "fixture-grid36",
  preset: { k: 3, n: 6 },
  quiver: {
    num_vertices: 4,
    num_mutable: 4,
    arrows: [
      [1, 4],
      [2, 1],
      [3, 1],
      [4, 2],
      [4, 3],
    ],
  },
  colors: ["red", "red", "red", "red"],
  g_matrix: [
    [0, -1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 0, -1, 0],
  ],
  c_matrix: [
    [0, -1, 0, 0],
    [-1, 0, 0, 0],
    [0, 0, 0, -1],
    [0, 0, -1, 0],
  ],
  f_polys: [
    "1 + y2 + y2*y3",
    "1 + y1 + y1*y2",
    "1 + y4 + y2*y4",
    "1 + y3 + y3*y4 + y1*y3 + y1*y3*y4 + y1*y2*y3*y4",
  ],
  history: [1, 2, 3, 4, 1, 3],
  all_red: true,
  sigma: [2, 1, 4, 3],
  undo_depth: 6,
};

/** Same grid payload with a frozen right column, as the full seed would show. */
export const withFrozen: SessionState = {
  ...a3Initial,
  id: "fixture-frozen",
  quiver: {
    num_vertices: 3,
    num_mutable: 2,
    arrows: [
      [1, 2],
      [3, 1],
    ],
  },
  colors: ["green", "green", "frozen"],
  g_matrix: [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
  ],
  c_matrix: [
    [1, 0],
    [0, 1],
  ],
  f_polys: ["1", "1"],
};
