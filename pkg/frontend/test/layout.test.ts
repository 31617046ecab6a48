import { describe, expect, it } from "vitest";

import { forceLayout, hiveLayout, isHiveLayout, layoutFor, parseHiveLabel }
  from "../src/layout.js";

describe("hive layout", () => {
  it("parses grid labels", () => {
    expect(parseHiveLabel("(1,2)")).toEqual([1, 2]);
    expect(parseHiveLabel("arm1:2")).toBeNull();
    expect(parseHiveLabel("center")).toBeNull();
  });

  it("detects hive vertex sets", () => {
    expect(isHiveLayout(["(0,1)", "(1,1)"])).toBe(true);
    expect(isHiveLayout(["(0,1)", "v2"])).toBe(false);
    expect(isHiveLayout([])).toBe(false);
  });

  it("places the triangular grid", () => {
    const pos = hiveLayout(["(0,1)", "(1,1)", "(2,1)"]);
    const a = pos.get("(0,1)")!;
    const b = pos.get("(1,1)")!;
    const c = pos.get("(2,1)")!;
    expect(b.x - a.x).toBeCloseTo(c.x - b.x);
    expect(a.y).toBeCloseTo(b.y);
  });

  it("falls back to a stable force layout", () => {
    const verts = ["a", "b", "c"];
    const arrows: [string, string][] = [["a", "b"], ["b", "c"]];
    const p1 = forceLayout(verts, arrows);
    const p2 = forceLayout(verts, arrows);
    for (const v of verts) {
      expect(p1.get(v)).toEqual(p2.get(v));
    }
    expect(layoutFor(verts, arrows).size).toBe(3);
  });
});
