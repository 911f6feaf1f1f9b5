/**
 * Pure rendering: every function here maps the last server payload (plus
 * local view selections) to strings.  Nothing in this module mutates state
 * or computes cluster math -- colors, matrices and polynomials are taken
 * from the payload verbatim.
 */

import { layoutFor, type Layout } from "./layout.js";
import type { SessionState, VertexColor } from "./types.js";

export interface ViewState {
  sessionId: string | null;
  selected: number | null; // vertex id
  toast: string | null;
  dtfClosedForm: string | null; // fetched closed-form text for the selected vertex
}

export const initialView: ViewState = {
  sessionId: null,
  selected: null,
  toast: null,
  dtfClosedForm: null,
};

const FILL: Record<VertexColor, string> = {
  green: "#2e9e44",
  red: "#d4452c",
  frozen: "#4a6fb5",
};

function escapeHtml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Decide what a click on vertex id should do; frozen vertices are inert. */
export function clickAction(
  state: SessionState,
  vertexId: number,
): { kind: "mutate"; vertex: number } | { kind: "ignore" } {
  const color = state.colors[vertexId - 1];
  if (!color || color === "frozen") return { kind: "ignore" };
  return { kind: "mutate", vertex: vertexId };
}

export function redFraction(state: SessionState): { red: number; mutable: number } {
  const mutable = state.quiver.num_mutable;
  const red = state.colors.slice(0, mutable).filter((c) => c === "red").length;
  return { red, mutable };
}

/** Banner line; announces completion once every mutable vertex is red. */
export function statusLine(state: SessionState): string {
  const { red, mutable } = redFraction(state);
  if (state.all_red) {
    const sigma = state.sigma ? `σ = (${state.sigma.join(",")})` : "σ unavailable";
    const reflection =
      state.preset && state.sigma && isColumnReflection(state)
        ? " (column reflection)"
        : "";
    return `reddening complete, ${sigma}${reflection}`;
  }
  return `reddening progress: ${red}/${mutable} red`;
}

function isColumnReflection(state: SessionState): boolean {
  if (!state.preset || !state.sigma) return false;
  const cols = state.preset.n - state.preset.k - 1;
  return state.sigma.every((image, i) => {
    const row = Math.floor(i / cols);
    const col = i % cols;
    return image === row * cols + (cols - 1 - col) + 1;
  });
}

export function quiverSvg(state: SessionState, view: ViewState): string {
  const layout = layoutFor(state);
  const width = Math.max(...layout.map((p) => p.x)) + 60;
  const height = Math.max(...layout.map((p) => p.y)) + 60;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">`,
  );
  parts.push(
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker></defs>`,
  );
  parts.push(...arrowLines(state, layout));
  state.colors.forEach((color, i) => {
    const p = layout[i];
    const id = i + 1;
    const selected = view.selected === id ? ` stroke="#222" stroke-width="3"` : ` stroke="#666"`;
    const cursor = color === "frozen" ? "default" : "pointer";
    parts.push(
      `<g data-vertex="${id}" cursor="${cursor}">` +
        `<circle cx="${p.x}" cy="${p.y}" r="20" fill="${FILL[color]}"${selected}/>` +
        `<text x="${p.x}" y="${p.y + 5}" text-anchor="middle" font-size="14" fill="#fff">${id}</text>` +
        `</g>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

function arrowLines(state: SessionState, layout: Layout): string[] {
  // parallel arrows get a small perpendicular offset so multiplicity is visible
  const counts = new Map<string, number>();
  for (const [s, t] of state.quiver.arrows) {
    counts.set(`${s}>${t}`, (counts.get(`${s}>${t}`) ?? 0) + 1);
  }
  const lines: string[] = [];
  for (const [key, count] of counts) {
    const [s, t] = key.split(">").map(Number);
    const a = layout[s - 1];
    const b = layout[t - 1];
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.max(Math.hypot(dx, dy), 1);
    const ux = dx / len;
    const uy = dy / len;
    const startX = a.x + ux * 24;
    const startY = a.y + uy * 24;
    const endX = b.x - ux * 24;
    const endY = b.y - uy * 24;
    for (let copy = 0; copy < count; copy++) {
      const offset = (copy - (count - 1) / 2) * 7;
      const ox = -uy * offset;
      const oy = ux * offset;
      lines.push(
        `<line x1="${r1(startX + ox)}" y1="${r1(startY + oy)}" x2="${r1(endX + ox)}" y2="${r1(endY + oy)}" stroke="#555" stroke-width="1.6" marker-end="url(#arrow)"/>`,
      );
    }
  }
  return lines;
}

function r1(v: number): number {
  return Math.round(v * 10) / 10;
}

function vectorText(column: number[]): string {
  return `(${column.join(", ")})`;
}

export function gvectorPanel(state: SessionState, view: ViewState): string {
  if (view.selected === null) return "<p>select a vertex</p>";
  const column = state.g_matrix[view.selected - 1];
  return `<h3>g-vector of vertex ${view.selected}</h3><code>${vectorText(column)}</code>`;
}

export function cvectorPanel(state: SessionState, view: ViewState): string {
  if (view.selected === null) return "<p>select a vertex</p>";
  if (view.selected > state.quiver.num_mutable) return "<p>frozen vertex: no c-vector</p>";
  const column = state.c_matrix[view.selected - 1];
  return `<h3>c-vector of vertex ${view.selected}</h3><code>${vectorText(column)}</code>`;
}

export function fpolyPanel(state: SessionState): string {
  if (state.f_polys === null) {
    return "<p>F-polynomial tracking is off for this session</p>";
  }
  const rows = state.f_polys
    .map((f, i) => `<tr><td>F<sub>${i + 1}</sub></td><td><code>${escapeHtml(f)}</code></td></tr>`)
    .join("");
  return `<table>${rows}</table>`;
}

export function historyPanel(state: SessionState): string {
  const word = state.history.length ? state.history.join(",") : "(empty)";
  return (
    `<p>word: <code>${word}</code></p>` +
    `<p>undo depth: ${state.undo_depth}</p>`
  );
}

/**
 * DTF comparison panel: the closed-form text comes from GET /dtf; the
 * mutation-route text is read off the final payload (the F-polynomial of the
 * vertex that sigma sends to the selected one).  Both strings are canonical,
 * so agreement is plain string equality.
 */
export function dtfPanel(state: SessionState, view: ViewState): string {
  if (!state.preset) return "<p>DTF comparison needs a grid preset</p>";
  if (view.selected === null) return "<p>select a vertex</p>";
  const closed = view.dtfClosedForm;
  const lines: string[] = [];
  lines.push(`<h3>DT F-polynomial at vertex ${view.selected}</h3>`);
  lines.push(
    closed
      ? `<p>closed form: <code>${escapeHtml(closed)}</code></p>`
      : "<p>closed form: loading...</p>",
  );
  if (state.all_red && state.sigma && state.f_polys) {
    const source = state.sigma.indexOf(view.selected);
    if (source >= 0) {
      const viaRun = state.f_polys[source];
      lines.push(`<p>from this run: <code>${escapeHtml(viaRun)}</code></p>`);
      if (closed) {
        lines.push(closed === viaRun ? "<p><b>MATCH</b></p>" : "<p><b>MISMATCH</b></p>");
      }
    }
  } else {
    lines.push("<p>run a reddening sequence to compare with this session</p>");
  }
  return lines.join("");
}

export function toastHtml(view: ViewState): string {
  return view.toast ? `<div class="toast">${escapeHtml(view.toast)}</div>` : "";
}

export interface ExportView {
  word: string;
  cli: string;
  downloadName: string;
  downloadContent: string;
}

export function exportView(word: number[], cli: string): ExportView {
  const text = word.join(",");
  return {
    word: text,
    cli,
    downloadName: "mutation-word.txt",
    downloadContent: text + "\n",
  };
}

/** The whole page as one pure function of (payload, view). */
export function renderPage(state: SessionState, view: ViewState): string {
  return [
    `<div class="status">${statusLine(state)}</div>`,
    `<div class="quiver">${quiverSvg(state, view)}</div>`,
    `<div class="panel" id="panel-g">${gvectorPanel(state, view)}</div>`,
    `<div class="panel" id="panel-c">${cvectorPanel(state, view)}</div>`,
    `<div class="panel" id="panel-f">${fpolyPanel(state)}</div>`,
    `<div class="panel" id="panel-history">${historyPanel(state)}</div>`,
    `<div class="panel" id="panel-dtf">${dtfPanel(state, view)}</div>`,
    toastHtml(view),
  ].join("\n");
}
