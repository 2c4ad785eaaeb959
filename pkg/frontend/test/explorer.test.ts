/** Scripted round-trip against the live service: seed A3, mutate at
 * vertex 2 by clicking the canvas, check the 3-cycle and the cycle
 * relator in the presentation panel, click again to restore, and decide
 * a braid-relation word pair in the console. */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { mount, ExplorerApp } from "../src/main.js";
import { parseHash, formatHash, seedQuiver } from "../src/state.js";
import { forceLayout } from "../src/layout.js";

let service: ChildProcess;
let baseUrl = "";

function startService(): Promise<string> {
  return new Promise((resolve, reject) => {
    service = spawn("python3", ["-m", "braidquiver.cli", "serve", "--port", "0"], {
      stdio: ["ignore", "ignore", "pipe"],
    });
    let buffer = "";
    service.stderr!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/serving on (http:\/\/[\d.]+:\d+)/);
      if (match) resolve(match[1]);
    });
    service.on("error", reject);
    service.on("exit", (code) => reject(new Error(`service exited: ${code}\n${buffer}`)));
    setTimeout(() => reject(new Error(`service did not start\n${buffer}`)), 20000);
  });
}

beforeAll(async () => {
  baseUrl = await startService();
  for (let i = 0; i < 50; i++) {
    try {
      const response = await fetch(`${baseUrl}/api/health`);
      if (response.ok) return;
    } catch {
      await new Promise((r) => setTimeout(r, 100));
    }
  }
  throw new Error("service never became healthy");
});

afterAll(() => {
  service?.kill();
});

function arrowsOnCanvas(app: ExplorerApp): [number, number][] {
  const lines = app.quiverView.svg.querySelectorAll("line.arrow");
  return Array.from(lines).map((line) => [
    Number(line.getAttribute("data-src")),
    Number(line.getAttribute("data-tgt")),
  ]);
}

function click(app: ExplorerApp, vertex: number): Promise<void> {
  const node = app.quiverView.svg.querySelector(`#vertex-${vertex}`)!;
  node.dispatchEvent(new MouseEvent("click", { bubbles: true }));
  return app.pending;
}

describe("explorer round trip", () => {
  it("mutates by clicking, restores by clicking again, decides words", async () => {
    window.location.hash = "#seed=A3";
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = mount(root, baseUrl, window);
    await app.pending;

    const seedArrows = arrowsOnCanvas(app);
    expect(seedArrows.sort()).toEqual([
      [1, 2],
      [2, 3],
    ]);
    const panel = root.querySelector("#presentation-panel")!;
    expect(panel.textContent).toContain("braid");
    expect(panel.textContent).not.toContain("cycle");

    await click(app, 2);
    expect(new Set(arrowsOnCanvas(app).map(String))).toEqual(
      new Set([String([1, 3]), String([2, 1]), String([3, 2])]),
    );
    expect(panel.textContent).toContain("cycle");
    expect(parseHash(window.location.hash).path).toEqual([2]);

    await click(app, 2);
    expect(arrowsOnCanvas(app).sort()).toEqual([
      [1, 2],
      [2, 3],
    ]);
    expect(panel.textContent).not.toContain("cycle");

    const input1 = document.getElementById("word-input-1") as HTMLInputElement;
    const input2 = document.getElementById("word-input-2") as HTMLInputElement;
    input1.value = "s1 s2 s1";
    input2.value = "s2 s1 s2";
    await app.console.compare();
    expect(document.getElementById("word-verdict")!.textContent).toBe("equal");
    input2.value = "s1 s2 s2";
    await app.console.compare();
    expect(document.getElementById("word-verdict")!.textContent).toBe("not equal");
    const history = document.getElementById("word-history")!;
    expect(history.children.length).toBe(2);
    root.remove();
  });

  it("keeps the surface quiver panel synchronized with flips", async () => {
    window.location.hash = "#seed=A3";
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = mount(root, baseUrl, window);
    await app.pending;

    const before = root.querySelectorAll("#surface-canvas path.arc").length;
    expect(before).toBe(3);
    const firstArc = app.triangulation!.arcs[0];
    app.flipArc(firstArc);
    await app.pending;
    expect(root.querySelectorAll("#surface-canvas path.arc").length).toBe(3);
    // flipping the innermost fan arc lands on the two-arrows-in quiver
    const panelText = root.querySelector("#surface-quiver-panel")!.textContent!;
    expect(panelText.split("\n").sort()).toEqual(["2 -> 1", "3 -> 1"]);
    root.remove();
  });

  it("undo replays the recorded path from the seed", async () => {
    window.location.hash = "#seed=A3";
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = mount(root, baseUrl, window);
    await app.pending;
    await click(app, 1);
    await click(app, 3);
    expect(parseHash(window.location.hash).path).toEqual([1, 3]);
    const undoButton = root.querySelector("#undo-button")! as HTMLButtonElement;
    undoButton.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await app.pending;
    expect(parseHash(window.location.hash).path).toEqual([1]);
    root.remove();
  });
});

describe("pure client helpers", () => {
  it("hash state round-trips", () => {
    const state = { seed: "D5", path: [2, 4, 1] };
    expect(parseHash(formatHash(state))).toEqual(state);
    expect(parseHash("#")).toEqual({ seed: "A3", path: [] });
  });

  it("seed quivers match the service convention", () => {
    expect(seedQuiver("A3").arrows).toEqual([
      [1, 2],
      [2, 3],
    ]);
    expect(seedQuiver("D4").arrows).toEqual([
      [1, 3],
      [2, 3],
      [3, 4],
    ]);
    expect(seedQuiver("E6").arrows.length).toBe(5);
  });

  it("layout is deterministic", () => {
    const quiver = seedQuiver("A4");
    const one = forceLayout(quiver.vertices, quiver.arrows);
    const two = forceLayout(quiver.vertices, quiver.arrows);
    expect(one).toEqual(two);
  });
});
