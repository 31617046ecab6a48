// End-to-end: drive the explorer through the seven-stage reduction with
// DOM clicks against a live session service, then compare the weight
// panel byte-for-byte with the command line transcript.

import { execFile, spawn } from "node:child_process";
import type { ChildProcess } from "node:child_process";
import { promisify } from "node:util";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SessionApi } from "../src/api.js";
import { ExplorerApp } from "../src/app.js";
import { canonicalJson } from "../src/state.js";

const exec = promisify(execFile);
const PORT = 8000 + Math.floor(Math.random() * 1000);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 120; i++) {
    try {
      const res = await fetch(`${BASE}/sessions/probe`);
      if (res.status === 404) return;
    } catch {
      // not up yet
    }
    await new Promise(r => setTimeout(r, 250));
  }
  throw new Error("session service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "uvicorn", "guca.service:app",
    "--port", String(PORT), "--log-level", "error"],
    { cwd: "..", stdio: "ignore" });
  await waitForServer();
});

afterAll(() => {
  server?.kill();
});

const STAGES = [
  { r: "arm1:5", sequence: [] as string[], after: null as string | null },
  { r: "arm2:5", sequence: [], after: null },
  { r: "arm3:5", sequence: [], after: null },
  { r: "arm1:3", sequence: ["(3,2)", "(3,1)"], after: "(3,2)" },
  { r: "arm1:1", sequence: ["(1,3)", "(1,2)"], after: "(1,3)" },
  { r: "arm2:3", sequence: ["(1,3)", "(2,3)"], after: "(1,3)" },
  { r: "arm2:1", sequence: ["(1,3)", "(2,1)"], after: "(2,2)" },
];

function click(el: Element): void {
  el.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

async function selectCoordinate(app: ExplorerApp, root: HTMLElement,
    r: string): Promise<void> {
  const select = root.querySelector<HTMLSelectElement>("#coordinate")!;
  select.value = r;
  select.dispatchEvent(new Event("change", { bubbles: true }));
  await app.whenIdle();
}

describe("t335 replay through the UI", () => {
  it("clicks through all seven stages and matches the CLI weight list",
      async () => {
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = new ExplorerApp(root, new SessionApi(BASE));
    await app.start("hive:6");
    await app.whenIdle();

    // frozen vertices render boxed and without a click affordance
    expect(root.querySelectorAll("rect.vertex.frozen").length).toBe(15);
    expect(root.querySelectorAll("circle.vertex.mutable").length).toBe(10);

    for (const stage of STAGES) {
      await selectCoordinate(app, root, stage.r);
      click(root.querySelector("#suggest")!);
      await app.whenIdle();
      const rows = Array.from(root.querySelectorAll(".candidate"));
      const wanted = `[${stage.sequence.join(" ")}]`;
      const row = rows.find(el => el.textContent!.includes(wanted));
      expect(row, `candidate ${wanted} at ${stage.r}`).toBeTruthy();
      click(row!.querySelector("button")!);
      await app.whenIdle();
      // the sign badges now gate the removal action: all mutable zero
      const removeBtn =
        root.querySelector<HTMLButtonElement>("#remove-vertex")!;
      expect(removeBtn.disabled).toBe(false);
      click(removeBtn);
      await app.whenIdle();
      if (stage.after) {
        click(root.querySelector(`[data-vertex="${stage.after}"]`)!);
        await app.whenIdle();
      }
    }

    const panel = root.querySelector("#weight-panel")!;
    const cli = await exec("guca", ["replicate", "t335"]);
    const transcript = JSON.parse(cli.stdout);
    expect(transcript.printed_weights_match).toBe(true);
    expect(panel.textContent).toBe(canonicalJson(transcript.final_weights));
  });

  it("refuses to mutate frozen vertices without a request", async () => {
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = new ExplorerApp(root, new SessionApi(BASE));
    await app.start("hive:3");
    await app.whenIdle();
    const frozen = root.querySelector('[data-vertex="(1,0)"] rect')!;
    expect(frozen.classList.contains("frozen")).toBe(true);
    const before = canonicalJson(app.state.server!.doc);
    click(root.querySelector('[data-vertex="(1,0)"]')!);
    await app.whenIdle();
    expect(canonicalJson(app.state.server!.doc)).toBe(before);
  });

  it("applying a suggestion equals manual clicks in that order",
      async () => {
    const rootA = document.createElement("div");
    const rootB = document.createElement("div");
    document.body.append(rootA, rootB);
    const a = new ExplorerApp(rootA, new SessionApi(BASE));
    const b = new ExplorerApp(rootB, new SessionApi(BASE));
    await a.start("hive:6");
    await b.start("hive:6");
    await a.whenIdle();
    await b.whenIdle();
    // manual clicks on A
    for (const v of ["(3,2)", "(3,1)"]) {
      click(rootA.querySelector(`[data-vertex="${v}"]`)!);
      await a.whenIdle();
    }
    // suggestion flow on B
    await selectCoordinate(b, rootB, "arm1:3");
    click(rootB.querySelector("#suggest")!);
    await b.whenIdle();
    const row = Array.from(rootB.querySelectorAll(".candidate"))
      .find(el => el.textContent!.includes("[(3,2) (3,1)]"))!;
    click(row.querySelector("button")!);
    await b.whenIdle();
    expect(canonicalJson(b.state.server!.doc.quiver))
      .toBe(canonicalJson(a.state.server!.doc.quiver));
    expect(canonicalJson(b.state.server!.doc.weights))
      .toBe(canonicalJson(a.state.server!.doc.weights));
  });
});
