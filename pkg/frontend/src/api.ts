/** Typed client for the bqm JSON service. Stateless on the server side;
 * the client drops stale responses by sequence number so only the newest
 * user action wins. */

export interface QuiverJson {
  vertices: number[];
  arrows: [number, number][];
}

export interface RelatorJson {
  word: number[];
  kind: string;
}

export interface PresentationJson {
  generators: number[];
  relators: RelatorJson[];
}

export type ArcJson =
  | { peripheral: [number, number] }
  | { radius: [number, string] };

export interface TriangulationJson {
  type: string;
  arcs: ArcJson[];
}

export interface WordEqJson {
  equal: boolean;
  normal_form_trivial: boolean;
}

export class ApiClient {
  private sequence = 0;

  constructor(readonly baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const ticket = ++this.sequence;
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (ticket !== this.sequence) {
      throw new StaleResponseError();
    }
    const payload = await response.json();
    if (!response.ok) {
      throw new Error((payload as { error?: string }).error ?? `HTTP ${response.status}`);
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return fetch(this.baseUrl + "/api/health").then((r) => r.json());
  }

  mutate(quiver: QuiverJson, vertex: number): Promise<{ quiver: QuiverJson }> {
    return this.post("/api/mutate", { quiver, vertex });
  }

  presentation(quiver: QuiverJson): Promise<PresentationJson> {
    return this.post("/api/presentation", { quiver });
  }

  wordeq(quiver: QuiverJson, w1: string, w2: string): Promise<WordEqJson> {
    return this.post("/api/wordeq", { quiver, w1, w2 });
  }

  surfaceInitial(type: string): Promise<{ triangulation: TriangulationJson }> {
    return this.post("/api/surface/initial", { type });
  }

  surfaceFlip(
    triangulation: TriangulationJson,
    arc: ArcJson,
  ): Promise<{ triangulation: TriangulationJson; replacement: ArcJson }> {
    return this.post("/api/surface/flip", { triangulation, arc });
  }

  surfaceQuiver(
    triangulation: TriangulationJson,
  ): Promise<{ quiver: QuiverJson; arcs: ArcJson[] }> {
    return this.post("/api/surface/quiver", { triangulation });
  }
}

export class StaleResponseError extends Error {
  constructor() {
    super("superseded by a newer action");
  }
}
