import type {
  DtfResponse,
  GVectorResponse,
  SessionState,
  UndoResponse,
  WordExport,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }

  get isConflict(): boolean {
    return this.status === 409;
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body: keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

/** Thin typed client; every method is one request, no local state. */
export class SessionClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  createPreset(k: number, n: number, trackFpolys?: boolean): Promise<SessionState> {
    const body: Record<string, unknown> = { k, n };
    if (trackFpolys !== undefined) body.track_fpolys = trackFpolys;
    return this.post("/sessions", body);
  }

  createCustom(quiver: unknown): Promise<SessionState> {
    return this.post("/sessions", { quiver });
  }

  getSession(id: string): Promise<SessionState> {
    return fetch(this.url(`/sessions/${id}`)).then((r) => unwrap<SessionState>(r));
  }

  mutate(id: string, vertex: number): Promise<SessionState> {
    return this.post(`/sessions/${id}/mutate`, { vertex });
  }

  undo(id: string): Promise<UndoResponse> {
    return this.post(`/sessions/${id}/undo`, {});
  }

  exportWord(id: string): Promise<WordExport> {
    return fetch(this.url(`/sessions/${id}/word`)).then((r) => unwrap<WordExport>(r));
  }

  dtf(k: number, n: number, p: number, q: number): Promise<DtfResponse> {
    const params = new URLSearchParams({ k: `${k}`, n: `${n}`, p: `${p}`, q: `${q}` });
    return fetch(this.url(`/dtf?${params}`)).then((r) => unwrap<DtfResponse>(r));
  }

  gvector(k: number, n: number, index: string): Promise<GVectorResponse> {
    const params = new URLSearchParams({ k: `${k}`, n: `${n}`, index });
    return fetch(this.url(`/gvector?${params}`)).then((r) => unwrap<GVectorResponse>(r));
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return unwrap<T>(response);
  }
}
