// DOM rendering. Everything displayed is read from the server state;
// the renderer only draws.

import { layoutFor } from "./layout.js";
import { removalEnabled, signOf, weightPanelText } from "./state.js";
import type { ViewState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Handlers {
  onVertexClick(vertex: string): void;
  onSelectR(r: string): void;
  onSuggest(): void;
  onApplyCandidate(index: number): void;
  onDeleteFreeze(): void;
  onUndo(): void;
  onRedo(): void;
}

export function renderApp(
  root: HTMLElement,
  state: ViewState,
  handlers: Handlers,
): void {
  root.textContent = "";
  const doc = root.ownerDocument;
  if (!state.server) {
    const p = doc.createElement("p");
    p.textContent = state.message || "no session";
    root.appendChild(p);
    return;
  }
  const views = state.server.views;

  const toolbar = doc.createElement("div");
  toolbar.id = "toolbar";
  const undoBtn = doc.createElement("button");
  undoBtn.id = "undo";
  undoBtn.textContent = "undo";
  undoBtn.disabled = !state.server.can_undo;
  undoBtn.addEventListener("click", () => handlers.onUndo());
  const redoBtn = doc.createElement("button");
  redoBtn.id = "redo";
  redoBtn.textContent = "redo";
  redoBtn.disabled = !state.server.can_redo;
  redoBtn.addEventListener("click", () => handlers.onRedo());
  toolbar.append(undoBtn, redoBtn);

  const select = doc.createElement("select");
  select.id = "coordinate";
  const blank = doc.createElement("option");
  blank.value = "";
  blank.textContent = "(coordinate)";
  select.appendChild(blank);
  for (const label of views.lattice_labels) {
    const opt = doc.createElement("option");
    opt.value = label;
    opt.textContent = label;
    if (label === state.selectedR) opt.selected = true;
    select.appendChild(opt);
  }
  select.addEventListener("change", () => handlers.onSelectR(select.value));
  toolbar.appendChild(select);

  const suggest = doc.createElement("button");
  suggest.id = "suggest";
  suggest.textContent = "suggest sequences";
  suggest.disabled = !state.selectedR;
  suggest.addEventListener("click", () => handlers.onSuggest());
  toolbar.appendChild(suggest);

  const removal = doc.createElement("button");
  removal.id = "remove-vertex";
  removal.textContent = "delete exceptions / freeze attached";
  removal.disabled = !(removalEnabled(state) && state.pendingDelete);
  removal.addEventListener("click", () => handlers.onDeleteFreeze());
  toolbar.appendChild(removal);
  root.appendChild(toolbar);

  if (state.message) {
    const msg = doc.createElement("div");
    msg.id = "message";
    msg.textContent = state.message;
    root.appendChild(msg);
  }

  root.appendChild(renderGraph(doc, state, handlers));
  root.appendChild(renderCandidates(doc, state, handlers));
  root.appendChild(renderWeightPanel(doc, state));
}

function renderGraph(
  doc: Document,
  state: ViewState,
  handlers: Handlers,
): Element {
  const views = state.server!.views;
  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("id", "graph");
  svg.setAttribute("width", "760");
  svg.setAttribute("height", "640");
  const pos = layoutFor(views.vertices, state.server!.doc.quiver.arrows);
  for (const [t, h] of state.server!.doc.quiver.arrows) {
    const pt = pos.get(t);
    const ph = pos.get(h);
    if (!pt || !ph) continue;
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(pt.x));
    line.setAttribute("y1", String(pt.y));
    line.setAttribute("x2", String(ph.x));
    line.setAttribute("y2", String(ph.y));
    line.setAttribute("class", "arrow");
    svg.appendChild(line);
  }
  const frozen = new Set(views.frozen);
  for (const v of views.vertices) {
    const p = pos.get(v);
    if (!p) continue;
    const g = doc.createElementNS(SVG_NS, "g");
    g.setAttribute("data-vertex", v);
    const isFrozen = frozen.has(v);
    const shape = doc.createElementNS(SVG_NS, isFrozen ? "rect" : "circle");
    if (isFrozen) {
      shape.setAttribute("x", String(p.x - 14));
      shape.setAttribute("y", String(p.y - 14));
      shape.setAttribute("width", "28");
      shape.setAttribute("height", "28");
    } else {
      shape.setAttribute("cx", String(p.x));
      shape.setAttribute("cy", String(p.y));
      shape.setAttribute("r", "16");
    }
    let cls = isFrozen ? "vertex frozen" : "vertex mutable";
    if (state.selectedR && views.sigma_r) {
      cls += ` sign-${signOf(views.sigma_r[v])}`;
    }
    shape.setAttribute("class", cls);
    if (!isFrozen) {
      g.addEventListener("click", () => handlers.onVertexClick(v));
    }
    const label = doc.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.textContent = v;
    if (state.selectedR && views.sigma_r && views.sigma_r[v] !== 0) {
      const badge = doc.createElementNS(SVG_NS, "text");
      badge.setAttribute("x", String(p.x + 18));
      badge.setAttribute("y", String(p.y - 12));
      badge.setAttribute("class", `badge sign-${signOf(views.sigma_r[v])}`);
      badge.textContent = String(views.sigma_r[v]);
      g.append(shape, label, badge);
    } else {
      g.append(shape, label);
    }
    svg.appendChild(g);
  }
  return svg;
}

function renderCandidates(
  doc: Document,
  state: ViewState,
  handlers: Handlers,
): Element {
  const box = doc.createElement("div");
  box.id = "candidates";
  state.candidates.forEach((cand, i) => {
    const row = doc.createElement("div");
    row.setAttribute("class", "candidate");
    const text = doc.createElement("span");
    text.textContent =
      `mutate [${cand.sequence.join(" ")}]  exceptions ` +
      `{${cand.exceptions.join(" ")}}  freeze {${cand.suggested_freeze.join(" ")}}`;
    const btn = doc.createElement("button");
    btn.textContent = "apply";
    btn.setAttribute("data-candidate", String(i));
    btn.addEventListener("click", () => handlers.onApplyCandidate(i));
    row.append(text, btn);
    box.appendChild(row);
  });
  return box;
}

function renderWeightPanel(doc: Document, state: ViewState): Element {
  const panel = doc.createElement("pre");
  panel.id = "weight-panel";
  panel.textContent = weightPanelText(state);
  return panel;
}
