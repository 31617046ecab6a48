// Vertex placement. Hive labels "(i,j)" go on the triangular grid the
// quiver is drawn on; anything else falls back to a deterministic
// force-directed layout with stable seeding.

export interface Point {
  x: number;
  y: number;
}

const HIVE_RE = /^\((-?\d+),(-?\d+)\)$/;

export function parseHiveLabel(label: string): [number, number] | null {
  const m = HIVE_RE.exec(label);
  return m ? [parseInt(m[1], 10), parseInt(m[2], 10)] : null;
}

export function isHiveLayout(vertices: string[]): boolean {
  return vertices.length > 0 && vertices.every(v => parseHiveLabel(v) !== null);
}

export function hiveLayout(vertices: string[], size = 72): Map<string, Point> {
  const out = new Map<string, Point>();
  for (const v of vertices) {
    const ij = parseHiveLabel(v);
    if (!ij) continue;
    const [i, j] = ij;
    // triangular grid: i to the right, j up-left at 60 degrees
    out.set(v, {
      x: 60 + size * (i + j / 2),
      y: 60 + size * j * Math.sqrt(3) / 2,
    });
  }
  return out;
}

// Mulberry32: small seedable generator so the fallback layout is stable.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  vertices: string[],
  arrows: [string, string][],
  iterations = 150,
  seed = 7,
): Map<string, Point> {
  const rand = mulberry32(seed);
  const pos = new Map<string, Point>();
  for (const v of vertices) {
    pos.set(v, { x: 300 + 200 * (rand() - 0.5), y: 300 + 200 * (rand() - 0.5) });
  }
  const k = 90;
  for (let it = 0; it < iterations; it++) {
    const disp = new Map<string, Point>();
    for (const v of vertices) disp.set(v, { x: 0, y: 0 });
    for (let a = 0; a < vertices.length; a++) {
      for (let b = a + 1; b < vertices.length; b++) {
        const pa = pos.get(vertices[a])!;
        const pb = pos.get(vertices[b])!;
        const dx = pa.x - pb.x;
        const dy = pa.y - pb.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const f = (k * k) / d2;
        const da = disp.get(vertices[a])!;
        const db = disp.get(vertices[b])!;
        da.x += dx * f * 0.05; da.y += dy * f * 0.05;
        db.x -= dx * f * 0.05; db.y -= dy * f * 0.05;
      }
    }
    for (const [t, h] of arrows) {
      const pt = pos.get(t);
      const ph = pos.get(h);
      if (!pt || !ph) continue;
      const dx = ph.x - pt.x;
      const dy = ph.y - pt.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const f = (d - k) / d * 0.02;
      const dt = disp.get(t)!;
      const dh = disp.get(h)!;
      dt.x += dx * f; dt.y += dy * f;
      dh.x -= dx * f; dh.y -= dy * f;
    }
    for (const v of vertices) {
      const p = pos.get(v)!;
      const d = disp.get(v)!;
      p.x += Math.max(-12, Math.min(12, d.x));
      p.y += Math.max(-12, Math.min(12, d.y));
    }
  }
  return pos;
}

export function layoutFor(
  vertices: string[],
  arrows: [string, string][],
): Map<string, Point> {
  return isHiveLayout(vertices)
    ? hiveLayout(vertices)
    : forceLayout(vertices, arrows);
}
