/** Exploration state: a seed type plus the mutation path from it. The
 * state lives in the URL hash so sessions are shareable; the current
 * quiver is always the replay of the path through the service. */

export interface ExplorerState {
  seed: string;
  path: number[];
}

export function parseHash(hash: string): ExplorerState {
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const seed = params.get("seed") ?? "A3";
  const raw = params.get("path") ?? "";
  const path = raw
    .split(",")
    .filter((token) => token.length > 0)
    .map((token) => Number.parseInt(token, 10))
    .filter((value) => Number.isFinite(value));
  return { seed, path };
}

export function formatHash(state: ExplorerState): string {
  const params = new URLSearchParams();
  params.set("seed", state.seed);
  if (state.path.length > 0) {
    params.set("path", state.path.join(","));
  }
  return "#" + params.toString();
}

/** Standard orientation of the seed diagram, matching the service's
 * Dynkin quivers: one arrow per diagram edge, lower to higher node. */
export function seedQuiver(seed: string): { vertices: number[]; arrows: [number, number][] } {
  const family = seed[0];
  const rank = Number.parseInt(seed.slice(1), 10);
  if (!Number.isFinite(rank) || rank < 1) {
    throw new Error(`bad seed type ${seed}`);
  }
  const vertices = Array.from({ length: rank }, (_, i) => i + 1);
  const arrows: [number, number][] = [];
  if (family === "A") {
    for (let i = 1; i < rank; i++) arrows.push([i, i + 1]);
  } else if (family === "D") {
    arrows.push([1, 3], [2, 3]);
    for (let i = 3; i < rank; i++) arrows.push([i, i + 1]);
  } else if (family === "E") {
    arrows.push([1, 3], [2, 4], [3, 4]);
    for (let i = 4; i < rank; i++) arrows.push([i, i + 1]);
  } else {
    throw new Error(`bad seed family ${seed}`);
  }
  return { vertices, arrows };
}
