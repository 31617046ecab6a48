// View state and canonical serialization of the weight panel.

import type { SearchCandidate, SessionState } from "./api.js";

export interface ViewState {
  sessionId: string | null;
  server: SessionState | null;
  selectedR: string | null;
  candidates: SearchCandidate[];
  pendingDelete: { v: string[]; u: string[] } | null;
  message: string;
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    server: null,
    selectedR: null,
    candidates: [],
    pendingDelete: null,
    message: "",
  };
}

// Canonical JSON: object keys sorted recursively, no whitespace. Used by
// the weight panel so its text is byte-comparable with the CLI
// transcript's weight list rendered the same way.
export function canonicalJson(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return `[${value.map(canonicalJson).join(",")}]`;
  }
  const obj = value as Record<string, unknown>;
  const keys = Object.keys(obj).sort();
  const inner = keys.map(k => `${JSON.stringify(k)}:${canonicalJson(obj[k])}`);
  return `{${inner.join(",")}}`;
}

export function weightPanelText(state: ViewState): string {
  if (!state.server) return "{}";
  return canonicalJson(state.server.views.weight_table);
}

export function signOf(value: number): "zero" | "pos" | "neg" {
  return value === 0 ? "zero" : value > 0 ? "pos" : "neg";
}

// The removal action becomes available when the selected coordinate
// vanishes on every mutable vertex (the removal theorem's hypothesis).
export function removalEnabled(state: ViewState): boolean {
  const s = state.server;
  if (!s || !s.views.sigma_r) return false;
  return s.views.mutable.every(v => s.views.sigma_r![v] === 0);
}

export function frozenExceptions(state: ViewState): string[] {
  const s = state.server;
  if (!s || !s.views.sigma_r) return [];
  return s.views.vertices
    .filter(v => s.views.sigma_r![v] !== 0)
    .sort();
}
