/** SVG rendering of the current quiver: circles for vertices (clickable,
 * one mutation per click), arrows with markers, labels. */

import { QuiverJson } from "./api.js";
import { forceLayout } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface QuiverViewCallbacks {
  onVertexClick(vertex: number): void;
}

export class QuiverView {
  readonly svg: SVGSVGElement;

  constructor(private readonly callbacks: QuiverViewCallbacks, doc: Document = document) {
    this.svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("id", "quiver-canvas");
    this.svg.setAttribute("viewBox", "0 0 420 320");
    this.svg.setAttribute("width", "420");
    this.svg.setAttribute("height", "320");
  }

  render(quiver: QuiverJson): void {
    const doc = this.svg.ownerDocument;
    while (this.svg.firstChild) this.svg.removeChild(this.svg.firstChild);
    const defs = doc.createElementNS(SVG_NS, "defs");
    defs.innerHTML =
      '<marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="3" orient="auto">' +
      '<path d="M0,0 L7,3 L0,6 z" fill="#444"/></marker>';
    this.svg.appendChild(defs);
    const positions = forceLayout(quiver.vertices, quiver.arrows);

    for (const [s, t] of quiver.arrows) {
      const ps = positions.get(s)!;
      const pt = positions.get(t)!;
      const dx = pt.x - ps.x;
      const dy = pt.y - ps.y;
      const dist = Math.max(1, Math.hypot(dx, dy));
      const trim = 18 / dist;
      const line = doc.createElementNS(SVG_NS, "line");
      line.setAttribute("class", "arrow");
      line.setAttribute("data-src", String(s));
      line.setAttribute("data-tgt", String(t));
      line.setAttribute("x1", String(ps.x + dx * trim));
      line.setAttribute("y1", String(ps.y + dy * trim));
      line.setAttribute("x2", String(pt.x - dx * trim));
      line.setAttribute("y2", String(pt.y - dy * trim));
      line.setAttribute("stroke", "#444");
      line.setAttribute("stroke-width", "1.6");
      line.setAttribute("marker-end", "url(#arrowhead)");
      this.svg.appendChild(line);
    }

    for (const v of quiver.vertices) {
      const p = positions.get(v)!;
      const group = doc.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "vertex");
      group.setAttribute("id", `vertex-${v}`);
      group.addEventListener("click", () => this.callbacks.onVertexClick(v));
      const circle = doc.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(p.x));
      circle.setAttribute("cy", String(p.y));
      circle.setAttribute("r", "14");
      circle.setAttribute("fill", "#e8f0fe");
      circle.setAttribute("stroke", "#1a57c2");
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(p.x));
      label.setAttribute("y", String(p.y + 4));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("font-size", "12");
      label.textContent = String(v);
      group.appendChild(circle);
      group.appendChild(label);
      this.svg.appendChild(group);
    }
  }
}
