/** App entry: load /frames.json from the serving process, then drive the
 * timeline explorer (main panel + axial strip of recent snapshots). */

import { communityHue } from "./color.js";
import { FrameSet, SchemaError, communityIds, parseFrames } from "./frames.js";
import { renderScene } from "./render.js";
import {
  ViewState, buildTimelineScene, createViewState, hoverNode, pinCommunity,
  scrollBy, setCurrentT, setStripDepth,
} from "./timeline.js";

interface App {
  doc: FrameSet;
  state: ViewState;
}

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function wireNodeEvents(svg: SVGSVGElement, app: App): void {
  svg.addEventListener("mouseover", (ev) => {
    const id = (ev.target as Element).getAttribute?.("data-node");
    if (id && app.state.hoveredNode !== id) {
      app.state = hoverNode(app.state, id);
      draw(app);
    }
  });
  svg.addEventListener("mouseout", (ev) => {
    if ((ev.target as Element).getAttribute?.("data-node")) {
      app.state = hoverNode(app.state, null);
      draw(app);
    }
  });
}

function drawLegend(app: App): void {
  const legend = byId("legend");
  legend.replaceChildren();
  for (const c of communityIds(app.doc.frames)) {
    const item = document.createElement("span");
    item.className = "legend-item" + (app.state.pinnedCommunity === c ? " pinned" : "");
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = `hsl(${communityHue(c)}, 70%, 55%)`;
    item.appendChild(swatch);
    item.appendChild(document.createTextNode(`c${c}`));
    item.addEventListener("click", () => {
      app.state = pinCommunity(app.state,
                               app.state.pinnedCommunity === c ? null : c);
      draw(app);
    });
    legend.appendChild(item);
  }
}

function draw(app: App): void {
  const scene = buildTimelineScene(app.doc, app.state);
  const mainSvg = renderScene(byId("main-panel"), scene.main, "main-scene");
  wireNodeEvents(mainSvg, app);

  const strip = byId("strip");
  strip.replaceChildren();
  for (const s of scene.strip) {
    const cell = document.createElement("div");
    cell.className = "strip-cell" + (s.t === app.state.currentT ? " current" : "");
    const label = document.createElement("div");
    label.className = "strip-label";
    label.textContent = `t=${s.t}`;
    cell.appendChild(label);
    const svg = renderScene(cell, s, "strip-scene");
    cell.insertBefore(label, svg);
    cell.addEventListener("click", () => {
      app.state = setCurrentT(app.state, app.doc.frames, s.t);
      draw(app);
    });
    wireNodeEvents(svg, app);
    strip.appendChild(cell);
  }

  byId("status").textContent =
    `${app.state.modeLabel} | t=${app.state.currentT}/${app.doc.frames.length - 1}` +
    ` | strip [${app.state.visibleRange[0]}..${app.state.visibleRange[1]}]`;
  (byId("t-slider") as HTMLInputElement).value = String(app.state.currentT);
  drawLegend(app);
}

function wireControls(app: App): void {
  const slider = byId("t-slider") as HTMLInputElement;
  slider.min = "0";
  slider.max = String(app.doc.frames.length - 1);
  slider.addEventListener("input", () => {
    app.state = setCurrentT(app.state, app.doc.frames, Number(slider.value));
    draw(app);
  });
  const depth = byId("strip-depth") as HTMLInputElement;
  depth.value = String(app.state.stripDepth);
  depth.addEventListener("change", () => {
    app.state = setStripDepth(app.state, app.doc.frames, Number(depth.value));
    draw(app);
  });
  byId("main-panel").addEventListener("wheel", (ev) => {
    ev.preventDefault();
    app.state = scrollBy(app.state, app.doc.frames,
                         (ev as WheelEvent).deltaY > 0 ? -1 : 1);
    draw(app);
  });
}

async function boot(): Promise<void> {
  const status = byId("status");
  try {
    const resp = await fetch("/frames.json");
    if (!resp.ok) throw new Error(`HTTP ${resp.status} loading /frames.json`);
    const doc = parseFrames(await resp.text());
    const app: App = { doc, state: createViewState(doc.frames, "frames.json") };
    wireControls(app);
    draw(app);
  } catch (err) {
    status.textContent = err instanceof SchemaError
      ? err.message
      : `failed to load frames: ${(err as Error).message}`;
    status.classList.add("error");
  }
}

boot();
