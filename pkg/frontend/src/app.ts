// Controller: wires DOM events to the session API and re-renders.
// Every action round-trips (no optimistic updates).

import { ApiError, SessionApi } from "./api.js";
import type { SearchCandidate } from "./api.js";
import { renderApp } from "./render.js";
import { initialState } from "./state.js";
import type { ViewState } from "./state.js";

export class ExplorerApp {
  state: ViewState = initialState();
  private rendering = Promise.resolve();

  constructor(
    private root: HTMLElement,
    private api: SessionApi,
  ) {}

  async start(builder: string): Promise<void> {
    this.state.sessionId = await this.api.create(builder);
    await this.refresh();
  }

  async refresh(): Promise<void> {
    if (!this.state.sessionId) return;
    this.state.server = await this.api.get(
      this.state.sessionId, this.state.selectedR ?? undefined);
    this.render();
  }

  render(): void {
    renderApp(this.root, this.state, {
      onVertexClick: v => this.run(() => this.clickVertex(v)),
      onSelectR: r => this.run(() => this.selectR(r)),
      onSuggest: () => this.run(() => this.suggest()),
      onApplyCandidate: i => this.run(() => this.applyCandidate(i)),
      onDeleteFreeze: () => this.run(() => this.deleteFreeze()),
      onUndo: () => this.run(() => this.undo()),
      onRedo: () => this.run(() => this.redo()),
    });
  }

  // serialize UI actions; surface server errors inline
  private run(op: () => Promise<void>): Promise<void> {
    this.rendering = this.rendering.then(async () => {
      try {
        this.state.message = "";
        await op();
      } catch (err) {
        this.state.message = err instanceof ApiError
          ? `server: ${err.message}`
          : String(err);
        this.render();
      }
    });
    return this.rendering;
  }

  async clickVertex(v: string): Promise<void> {
    await this.api.mutate(this.state.sessionId!, v);
    this.state.candidates = [];
    this.state.pendingDelete = null;
    await this.refresh();
  }

  async selectR(r: string): Promise<void> {
    this.state.selectedR = r || null;
    this.state.candidates = [];
    this.state.pendingDelete = null;
    await this.refresh();
  }

  async suggest(): Promise<void> {
    if (!this.state.selectedR) return;
    const res = await this.api.search(
      this.state.sessionId!, this.state.selectedR, 2);
    this.state.candidates = res.candidates;
    this.render();
  }

  // apply = replay the suggested mutations as ordinary clicks, then
  // pre-fill the delete/freeze dialog with the server's exception and
  // attached sets
  async applyCandidate(index: number): Promise<void> {
    const cand: SearchCandidate | undefined = this.state.candidates[index];
    if (!cand) return;
    for (const v of cand.sequence) {
      await this.api.mutate(this.state.sessionId!, v);
    }
    this.state.pendingDelete = {
      v: cand.exceptions,
      u: cand.suggested_freeze,
    };
    this.state.candidates = [];
    await this.refresh();
  }

  // the removal step: when the rep data is present and a coordinate is
  // selected, let the server run the full removal (it deletes the
  // exceptions, freezes their attached set, and restricts the grading);
  // otherwise fall back to a plain delete/freeze of the pending sets
  async deleteFreeze(): Promise<void> {
    const pending = this.state.pendingDelete;
    if (!pending) return;
    if (this.state.server?.doc.rep && this.state.selectedR) {
      const res = await this.api.removeVertex(
        this.state.sessionId!, this.state.selectedR, 0);
      if (!res.ok) {
        this.state.message = res.diagnosis ?? "removal failed";
      }
    } else {
      await this.api.deleteFreeze(
        this.state.sessionId!, pending.v, pending.u);
    }
    this.state.pendingDelete = null;
    this.state.selectedR = null;
    await this.refresh();
  }

  async undo(): Promise<void> {
    await this.api.undo(this.state.sessionId!);
    await this.refresh();
  }

  async redo(): Promise<void> {
    await this.api.redo(this.state.sessionId!);
    await this.refresh();
  }

  whenIdle(): Promise<void> {
    return this.rendering;
  }
}
