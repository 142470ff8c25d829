/** SVG projection of a FrameScene. Rendering is idempotent per scene. */

import { hslStyle } from "./color.js";
import { FrameScene, NodeGlyph } from "./scene.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function sceneBounds(scene: FrameScene): [number, number, number, number] {
  if (scene.glyphs.length === 0) return [-1, -1, 2, 2];
  let xMin = Infinity, yMin = Infinity, xMax = -Infinity, yMax = -Infinity;
  for (const g of scene.glyphs) {
    xMin = Math.min(xMin, g.x); xMax = Math.max(xMax, g.x);
    yMin = Math.min(yMin, g.y); yMax = Math.max(yMax, g.y);
  }
  const pad = 0.08 * Math.max(xMax - xMin, yMax - yMin, 1);
  return [xMin - pad, yMin - pad, xMax - xMin + 2 * pad, yMax - yMin + 2 * pad];
}

function trianglePoints(x: number, y: number, r: number): string {
  const pts: string[] = [];
  for (let i = 0; i < 3; i++) {
    const a = -Math.PI / 2 + (i * 2 * Math.PI) / 3;
    pts.push(`${x + r * Math.cos(a)},${y + r * Math.sin(a)}`);
  }
  return pts.join(" ");
}

function glyphElement(doc: Document, g: NodeGlyph, scale: number): SVGElement {
  const r = g.size * scale;
  let el: SVGElement;
  if (g.shape === "triangle") {
    el = doc.createElementNS(SVG_NS, "polygon");
    el.setAttribute("points", trianglePoints(g.x, g.y, 1.25 * r));
  } else {
    el = doc.createElementNS(SVG_NS, "circle");
    el.setAttribute("cx", String(g.x));
    el.setAttribute("cy", String(g.y));
    el.setAttribute("r", String(r));
  }
  el.setAttribute("fill", hslStyle(g.fill));
  el.setAttribute("stroke", g.highlighted ? "#111" : "#666");
  el.setAttribute("stroke-width", String((g.highlighted ? 2.5 : 0.6) * scale));
  el.setAttribute("data-node", g.id);
  el.classList.add("node");
  if (g.highlighted) el.classList.add("highlighted");
  return el;
}

export function renderScene(container: HTMLElement, scene: FrameScene,
                            cssClass: string): SVGSVGElement {
  const doc = container.ownerDocument;
  const svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
  const [bx, by, bw, bh] = sceneBounds(scene);
  svg.setAttribute("viewBox", `${bx} ${by} ${bw} ${bh}`);
  svg.setAttribute("class", cssClass);
  svg.setAttribute("data-t", String(scene.t));
  // node glyphs carry sizes in screen-ish units; scale them to layout units
  const scale = Math.max(bw, bh) / 400;
  for (const e of scene.edges) {
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(e.x1));
    line.setAttribute("y1", String(e.y1));
    line.setAttribute("x2", String(e.x2));
    line.setAttribute("y2", String(e.y2));
    line.setAttribute("stroke", "#bbb");
    line.setAttribute("stroke-width", String(e.width * scale));
    svg.appendChild(line);
  }
  for (const g of scene.glyphs) svg.appendChild(glyphElement(doc, g, scale));
  container.replaceChildren(svg);
  return svg;
}
