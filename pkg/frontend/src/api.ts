// Typed client for the session service. The UI performs no algebra:
// every number it renders comes from one of these responses.

export interface QuiverJson {
  vertices: string[];
  frozen: string[];
  arrows: [string, string][];
}

export interface DocJson {
  version: string;
  quiver: QuiverJson;
  lattice: { rank: number; labels: string[]; euler_matrix: number[][] };
  weights: Record<string, number[]>;
  rep?: { vertices: string[]; arrows: [string, string][]; beta: number[] };
  history: string[];
}

export interface Views {
  b_matrix: number[][];
  mutable: string[];
  vertices: string[];
  frozen: string[];
  weight_table: Record<string, number[]>;
  lattice_labels: string[];
  r?: string;
  sigma_r?: Record<string, number>;
}

export interface SessionState {
  id: string;
  doc: DocJson;
  views: Views;
  can_undo: boolean;
  can_redo: boolean;
}

export interface SearchCandidate {
  sequence: string[];
  exceptions: string[];
  suggested_freeze: string[];
}

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await res.json();
  if (!res.ok) {
    throw new ApiError(res.status, body.code ?? "error",
      body.message ?? "request failed");
  }
  return body as T;
}

export class SessionApi {
  constructor(public base: string) {}

  async create(builder: string): Promise<string> {
    const body = await request<{ id: string }>(`${this.base}/sessions`, {
      method: "POST",
      body: JSON.stringify({ builder }),
    });
    return body.id;
  }

  get(id: string, r?: string): Promise<SessionState> {
    const query = r ? `?r=${encodeURIComponent(r)}` : "";
    return request(`${this.base}/sessions/${id}${query}`);
  }

  mutate(id: string, vertex: string): Promise<{ doc: DocJson }> {
    return request(`${this.base}/sessions/${id}/mutate`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  search(id: string, r: string, depth: number):
      Promise<{ candidates: SearchCandidate[] }> {
    return request(`${this.base}/sessions/${id}/search`, {
      method: "POST",
      body: JSON.stringify({ r, depth }),
    });
  }

  deleteFreeze(id: string, v: string[], u: string[] | "auto"):
      Promise<{ deleted: string[]; frozen: string[] }> {
    return request(`${this.base}/sessions/${id}/delete-freeze`, {
      method: "POST",
      body: JSON.stringify({ v, u }),
    });
  }

  removeVertex(id: string, r: string, depth = 0):
      Promise<{ ok: boolean; deleted?: string[]; frozen?: string[];
                diagnosis?: string }> {
    return request(`${this.base}/sessions/${id}/remove-vertex`, {
      method: "POST",
      body: JSON.stringify({ r, depth }),
    });
  }

  undo(id: string): Promise<{ doc: DocJson }> {
    return request(`${this.base}/sessions/${id}/undo`, { method: "POST" });
  }

  redo(id: string): Promise<{ doc: DocJson }> {
    return request(`${this.base}/sessions/${id}/redo`, { method: "POST" });
  }
}
