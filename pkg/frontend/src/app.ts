/**
 * Browser entry point.  All state transitions go through the server; this
 * file only wires DOM events to API calls and re-renders the pure view.
 */

import { ApiError, SessionClient } from "./api.js";
import { clickAction, exportView, initialView, renderPage, type ViewState } from "./render.js";
import type { SessionState } from "./types.js";

const params = new URLSearchParams(window.location.search);
const client = new SessionClient(params.get("api") ?? "http://127.0.0.1:8787");

let state: SessionState | null = null;
let view: ViewState = { ...initialView };

const root = document.getElementById("root")!;
const controls = document.getElementById("controls")!;

function draw(): void {
  if (state) {
    root.innerHTML = renderPage(state, view);
  }
}

function setState(next: SessionState): void {
  state = next;
  view = { ...view, sessionId: next.id, toast: null };
  draw();
}

function toast(message: string): void {
  view = { ...view, toast: message };
  draw();
  window.setTimeout(() => {
    view = { ...view, toast: null };
    draw();
  }, 2500);
}

async function refreshDtfPanel(): Promise<void> {
  if (!state || !state.preset || view.selected === null) return;
  const { k, n } = state.preset;
  const cols = n - k - 1;
  const i = view.selected - 1;
  const p = (i % cols) + 1;
  const q = k - 1 - Math.floor(i / cols);
  try {
    const response = await client.dtf(k, n, p, q);
    view = { ...view, dtfClosedForm: response.poly };
    draw();
  } catch (error) {
    toast(`dtf: ${error instanceof Error ? error.message : error}`);
  }
}

root.addEventListener("click", async (event) => {
  if (!state) return;
  const group = (event.target as Element).closest("[data-vertex]");
  if (!group) return;
  const vertex = Number(group.getAttribute("data-vertex"));
  view = { ...view, selected: vertex, dtfClosedForm: null };
  const action = clickAction(state, vertex);
  if (action.kind === "ignore") {
    draw();
    void refreshDtfPanel();
    return;
  }
  try {
    setState(await client.mutate(state.id, action.vertex));
  } catch (error) {
    if (error instanceof ApiError && error.isConflict) {
      toast(`server refused the mutation: ${error.detail}`);
    } else {
      toast(`mutate failed: ${error instanceof Error ? error.message : error}`);
    }
  }
  void refreshDtfPanel();
});

async function start(k: number, n: number): Promise<void> {
  try {
    setState(await client.createPreset(k, n));
  } catch (error) {
    toast(`create failed: ${error instanceof Error ? error.message : error}`);
  }
}

controls.innerHTML = `
  <label>k <input id="input-k" type="number" value="4" min="2" style="width:4em"></label>
  <label>n <input id="input-n" type="number" value="9" min="4" style="width:4em"></label>
  <button id="btn-create">new session</button>
  <button id="btn-undo">undo</button>
  <button id="btn-export">export word</button>
  <span id="export-out"></span>
`;

document.getElementById("btn-create")!.addEventListener("click", () => {
  const k = Number((document.getElementById("input-k") as HTMLInputElement).value);
  const n = Number((document.getElementById("input-n") as HTMLInputElement).value);
  void start(k, n);
});

document.getElementById("btn-undo")!.addEventListener("click", async () => {
  if (!state) return;
  const response = await client.undo(state.id);
  if (!response.undone) toast("nothing to undo");
  setState(response);
});

document.getElementById("btn-export")!.addEventListener("click", async () => {
  if (!state) return;
  const exported = await client.exportWord(state.id);
  const model = exportView(exported.word, exported.cli);
  const blob = new Blob([model.downloadContent], { type: "text/plain" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = model.downloadName;
  link.click();
  URL.revokeObjectURL(link.href);
  document.getElementById("export-out")!.innerHTML =
    `word: <code>${model.word || "(empty)"}</code> &middot; <code>${model.cli}</code>`;
});

void start(4, 9);
