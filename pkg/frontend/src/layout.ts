/** Deterministic force-directed layout. Positions are seeded from the
 * vertex ids by a fixed PRNG and relaxed by a fixed number of spring
 * iterations, so the same quiver always renders identically. */

export interface Point {
  x: number;
  y: number;
}

function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  vertices: number[],
  edges: [number, number][],
  width = 420,
  height = 320,
  iterations = 150,
): Map<number, Point> {
  const positions = new Map<number, Point>();
  for (const v of vertices) {
    const rand = mulberry32(0x9e3779b9 ^ (v * 2654435761));
    positions.set(v, {
      x: width * (0.15 + 0.7 * rand()),
      y: height * (0.15 + 0.7 * rand()),
    });
  }
  const idealEdge = Math.min(width, height) / 2.6;
  for (let step = 0; step < iterations; step++) {
    const force = new Map<number, Point>(vertices.map((v) => [v, { x: 0, y: 0 }]));
    for (const a of vertices) {
      for (const b of vertices) {
        if (a >= b) continue;
        const pa = positions.get(a)!;
        const pb = positions.get(b)!;
        const dx = pa.x - pb.x;
        const dy = pa.y - pb.y;
        const dist = Math.max(12, Math.hypot(dx, dy));
        const repulse = (idealEdge * idealEdge) / (dist * dist) * 9;
        force.get(a)!.x += (dx / dist) * repulse;
        force.get(a)!.y += (dy / dist) * repulse;
        force.get(b)!.x -= (dx / dist) * repulse;
        force.get(b)!.y -= (dy / dist) * repulse;
      }
    }
    for (const [s, t] of edges) {
      const ps = positions.get(s)!;
      const pt = positions.get(t)!;
      const dx = pt.x - ps.x;
      const dy = pt.y - ps.y;
      const dist = Math.max(12, Math.hypot(dx, dy));
      const pull = (dist - idealEdge) * 0.04;
      force.get(s)!.x += (dx / dist) * pull;
      force.get(s)!.y += (dy / dist) * pull;
      force.get(t)!.x -= (dx / dist) * pull;
      force.get(t)!.y -= (dy / dist) * pull;
    }
    const cool = 1 - step / iterations;
    for (const v of vertices) {
      const p = positions.get(v)!;
      const f = force.get(v)!;
      p.x += Math.max(-8, Math.min(8, f.x)) * cool;
      p.y += Math.max(-8, Math.min(8, f.y)) * cool;
      p.x = Math.max(20, Math.min(width - 20, p.x));
      p.y = Math.max(20, Math.min(height - 20, p.y));
    }
  }
  return positions;
}
