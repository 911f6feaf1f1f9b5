/** Wire protocol of the session service, consumed verbatim. */

export interface QuiverJson {
  num_vertices: number;
  num_mutable: number;
  arrows: [number, number][];
}

export type VertexColor = "green" | "red" | "frozen";

export interface SessionState {
  id: string;
  preset: { k: number; n: number } | null;
  quiver: QuiverJson;
  colors: VertexColor[];
  g_matrix: number[][]; // columns
  c_matrix: number[][]; // columns
  f_polys: string[] | null;
  history: number[];
  all_red: boolean;
  sigma: number[] | null;
  undo_depth: number;
}

export interface UndoResponse extends SessionState {
  undone: boolean;
}

export interface WordExport {
  id: string;
  word: number[];
  cli: string;
}

export interface DtfResponse {
  vertex: [number, number];
  box: [number, number, number];
  terms: number;
  poly: string;
}

export interface GVectorSupportEntry {
  id: number;
  vertex: string;
  plucker: string;
  coeff: number;
}

export interface GVectorResponse {
  k: number;
  n: number;
  index: string;
  gvector: number[];
  support: GVectorSupportEntry[];
}
