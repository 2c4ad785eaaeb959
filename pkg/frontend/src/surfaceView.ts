/** Triangulation view: boundary vertices clockwise on a circle, the
 * puncture (type D) in the centre, arcs as clickable curves (notched
 * radius ends drawn with a bowtie glyph), braid-graph overlay. */

import { ArcJson, TriangulationJson } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 340;
const RADIUS = 140;

export interface SurfaceViewCallbacks {
  onArcClick(arc: ArcJson): void;
}

function boundaryPoint(index: number, count: number): { x: number; y: number } {
  // vertex 1 at angle 180 degrees, clockwise numbering
  const angle = Math.PI - (2 * Math.PI * (index - 1)) / count;
  return {
    x: SIZE / 2 + RADIUS * Math.cos(angle),
    y: SIZE / 2 - RADIUS * Math.sin(angle),
  };
}

function markedPoints(type: string): number {
  const rank = Number.parseInt(type.slice(1), 10);
  return type[0] === "A" ? rank + 3 : rank;
}

export class SurfaceView {
  readonly svg: SVGSVGElement;

  constructor(private readonly callbacks: SurfaceViewCallbacks, doc: Document = document) {
    this.svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("id", "surface-canvas");
    this.svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    this.svg.setAttribute("width", String(SIZE));
    this.svg.setAttribute("height", String(SIZE));
  }

  render(tri: TriangulationJson): void {
    const doc = this.svg.ownerDocument;
    while (this.svg.firstChild) this.svg.removeChild(this.svg.firstChild);
    const m = markedPoints(tri.type);
    const punctured = tri.type[0] === "D";

    const rim = doc.createElementNS(SVG_NS, "circle");
    rim.setAttribute("cx", String(SIZE / 2));
    rim.setAttribute("cy", String(SIZE / 2));
    rim.setAttribute("r", String(RADIUS));
    rim.setAttribute("fill", "none");
    rim.setAttribute("stroke", "#999");
    this.svg.appendChild(rim);

    tri.arcs.forEach((arc, index) => {
      const path = doc.createElementNS(SVG_NS, "path");
      path.setAttribute("class", "arc");
      path.setAttribute("id", `arc-${index}`);
      path.setAttribute("fill", "none");
      path.setAttribute("stroke", "#7a2fa0");
      path.setAttribute("stroke-width", "2");
      path.setAttribute("d", this.arcPath(arc, m));
      path.addEventListener("click", () => this.callbacks.onArcClick(arc));
      this.svg.appendChild(path);
      if ("radius" in arc && arc.radius[1] === "notched") {
        const base = boundaryPoint(arc.radius[0], m);
        const glyph = doc.createElementNS(SVG_NS, "text");
        glyph.setAttribute("class", "notch-glyph");
        glyph.setAttribute("x", String((base.x + SIZE / 2) / 2));
        glyph.setAttribute("y", String((base.y + SIZE / 2) / 2));
        glyph.setAttribute("text-anchor", "middle");
        glyph.setAttribute("font-size", "12");
        glyph.textContent = "⋈";
        this.svg.appendChild(glyph);
      }
    });

    for (let v = 1; v <= m; v++) {
      const p = boundaryPoint(v, m);
      const dot = doc.createElementNS(SVG_NS, "circle");
      dot.setAttribute("cx", String(p.x));
      dot.setAttribute("cy", String(p.y));
      dot.setAttribute("r", "4");
      dot.setAttribute("fill", "#333");
      this.svg.appendChild(dot);
      const label = doc.createElementNS(SVG_NS, "text");
      const out = 1.12;
      label.setAttribute("x", String(SIZE / 2 + (p.x - SIZE / 2) * out));
      label.setAttribute("y", String(SIZE / 2 + (p.y - SIZE / 2) * out));
      label.setAttribute("font-size", "10");
      label.setAttribute("text-anchor", "middle");
      label.textContent = String(v);
      this.svg.appendChild(label);
    }
    if (punctured) {
      const puncture = doc.createElementNS(SVG_NS, "circle");
      puncture.setAttribute("id", "puncture");
      puncture.setAttribute("cx", String(SIZE / 2));
      puncture.setAttribute("cy", String(SIZE / 2));
      puncture.setAttribute("r", "3");
      puncture.setAttribute("fill", "#111");
      this.svg.appendChild(puncture);
    }
  }

  private arcPath(arc: ArcJson, m: number): string {
    const centre = SIZE / 2;
    if ("radius" in arc) {
      const [base, tag] = arc.radius;
      const p = boundaryPoint(base, m);
      const bulge = tag === "plain" ? -14 : 14;
      const midX = (p.x + centre) / 2;
      const midY = (p.y + centre) / 2;
      const dx = centre - p.x;
      const dy = centre - p.y;
      const len = Math.max(1, Math.hypot(dx, dy));
      return (
        `M ${p.x} ${p.y} Q ${midX - (dy / len) * bulge} ${midY + (dx / len) * bulge} ` +
        `${centre} ${centre}`
      );
    }
    const [a, b] = arc.peripheral;
    const pa = boundaryPoint(a, m);
    const pb = boundaryPoint(b, m);
    // pull the control point toward the rim for small caps, toward the
    // centre for wide ones, so nested fans render nested
    const capSize = (b - a + m) % m;
    const pull = 0.25 + 0.5 * (capSize / m);
    const cx = centre + ((pa.x + pb.x) / 2 - centre) * (1 - pull);
    const cy = centre + ((pa.y + pb.y) / 2 - centre) * (1 - pull);
    return `M ${pa.x} ${pa.y} Q ${cx} ${cy} ${pb.x} ${pb.y}`;
  }
}
