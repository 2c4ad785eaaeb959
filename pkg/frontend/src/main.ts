/** Explorer wiring: quiver canvas with click-to-mutate and an undo
 * stack, a presentation panel refreshed per mutation, the surface view
 * with click-to-flip, and the word console. All computation happens on
 * the service; the client renders and keeps (seed, path) in the hash. */

import { ApiClient, ArcJson, PresentationJson, QuiverJson, TriangulationJson } from "./api.js";
import { WordConsole } from "./console.js";
import { QuiverView } from "./quiverView.js";
import { formatHash, parseHash, seedQuiver } from "./state.js";
import { SurfaceView } from "./surfaceView.js";

export class ExplorerApp {
  readonly api: ApiClient;
  readonly quiverView: QuiverView;
  readonly surfaceView: SurfaceView;
  readonly console: WordConsole;
  seed: string;
  path: number[] = [];
  quiver: QuiverJson;
  triangulation: TriangulationJson | null = null;
  /** Last in-flight action; tests await this. */
  pending: Promise<void> = Promise.resolve();

  private readonly presentationPanel: HTMLElement;
  private readonly pathLabel: HTMLElement;
  private readonly surfaceQuiverPanel: HTMLElement;

  constructor(
    root: HTMLElement,
    baseUrl: string,
    private readonly win: Window = window,
  ) {
    this.api = new ApiClient(baseUrl);
    const doc = root.ownerDocument;
    const state = parseHash(this.win.location.hash);
    this.seed = state.seed;
    this.path = state.path;
    this.quiver = seedQuiver(this.seed);

    const left = doc.createElement("section");
    left.id = "quiver-pane";
    const heading = doc.createElement("h3");
    heading.textContent = "Quiver (click a vertex to mutate)";
    this.quiverView = new QuiverView({ onVertexClick: (v) => this.mutateAt(v) }, doc);
    const undo = doc.createElement("button");
    undo.id = "undo-button";
    undo.textContent = "undo";
    undo.addEventListener("click", () => {
      this.pending = this.undo();
    });
    this.pathLabel = doc.createElement("div");
    this.pathLabel.id = "path-label";
    this.presentationPanel = doc.createElement("pre");
    this.presentationPanel.id = "presentation-panel";
    left.append(heading, this.quiverView.svg, undo, this.pathLabel, this.presentationPanel);

    const right = doc.createElement("section");
    right.id = "surface-pane";
    const sHeading = doc.createElement("h3");
    sHeading.textContent = "Surface (click an arc to flip)";
    this.surfaceView = new SurfaceView({ onArcClick: (arc) => this.flipArc(arc) }, doc);
    this.surfaceQuiverPanel = doc.createElement("pre");
    this.surfaceQuiverPanel.id = "surface-quiver-panel";
    right.append(sHeading, this.surfaceView.svg, this.surfaceQuiverPanel);

    this.console = new WordConsole(this.api, doc);
    root.append(left, right, this.console.root);
  }

  /** Replay the hash state through the service and render everything. */
  async start(): Promise<void> {
    let quiver = seedQuiver(this.seed);
    for (const vertex of this.path) {
      quiver = (await this.api.mutate(quiver, vertex)).quiver;
    }
    this.quiver = quiver;
    await this.refreshQuiverPane();
    if (this.seed[0] === "A" || this.seed[0] === "D") {
      this.triangulation = (await this.api.surfaceInitial(this.seed)).triangulation;
      await this.refreshSurfacePane();
    }
  }

  mutateAt(vertex: number): void {
    this.pending = (async () => {
      const result = await this.api.mutate(this.quiver, vertex);
      this.quiver = result.quiver;
      this.path.push(vertex);
      this.syncHash();
      await this.refreshQuiverPane();
    })();
  }

  private async undo(): Promise<void> {
    if (this.path.length === 0) return;
    const replay = this.path.slice(0, -1);
    let quiver = seedQuiver(this.seed);
    for (const vertex of replay) {
      quiver = (await this.api.mutate(quiver, vertex)).quiver;
    }
    this.quiver = quiver;
    this.path = replay;
    this.syncHash();
    await this.refreshQuiverPane();
  }

  flipArc(arc: ArcJson): void {
    this.pending = (async () => {
      if (!this.triangulation) return;
      const result = await this.api.surfaceFlip(this.triangulation, arc);
      this.triangulation = result.triangulation;
      await this.refreshSurfacePane();
    })();
  }

  private async refreshQuiverPane(): Promise<void> {
    this.quiverView.render(this.quiver);
    this.console.setQuiver(this.quiver);
    this.pathLabel.textContent =
      this.path.length === 0 ? "path: (seed)" : `path: ${this.path.join(" ")}`;
    const presentation = await this.api.presentation(this.quiver);
    this.presentationPanel.textContent = renderPresentation(presentation);
  }

  private async refreshSurfacePane(): Promise<void> {
    if (!this.triangulation) return;
    this.surfaceView.render(this.triangulation);
    const result = await this.api.surfaceQuiver(this.triangulation);
    this.surfaceQuiverPanel.textContent = result.quiver.arrows
      .map(([s, t]) => `${s} -> ${t}`)
      .join("\n");
  }

  private syncHash(): void {
    this.win.location.hash = formatHash({ seed: this.seed, path: this.path });
  }
}

export function renderPresentation(presentation: PresentationJson): string {
  const lines = presentation.relators.map((relator) => {
    const word = relator.word
      .map((x) => (x > 0 ? `s${x}` : `s${-x}^-1`))
      .join(" ");
    return `${relator.kind}: ${word}`;
  });
  return lines.join("\n");
}

export function mount(root: HTMLElement, baseUrl: string, win?: Window): ExplorerApp {
  const app = new ExplorerApp(root, baseUrl, win);
  app.pending = app.start();
  return app;
}

declare global {
  interface Window {
    explorer?: ExplorerApp;
  }
}

if (typeof document !== "undefined" && document.getElementById("app-root")) {
  const base = (window as Window & { BQM_BASE_URL?: string }).BQM_BASE_URL ?? "";
  window.explorer = mount(document.getElementById("app-root")!, base);
}
