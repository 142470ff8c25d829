/** Timeline composite behaviour: main panel, axial strip, linked highlight. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { FrameSet, parseFrames } from "../src/frames.js";
import {
  buildTimelineScene, createViewState, hoverNode, pinCommunity, scrollBy,
  setCurrentT, setStripDepth,
} from "../src/timeline.js";

const here = dirname(fileURLToPath(import.meta.url));
const golden: FrameSet = parseFrames(
  readFileSync(join(here, "golden_frames.json"), "utf8"));

describe("view state", () => {
  it("starts at the latest frame with a depth-2 strip by default", () => {
    const s = createViewState(golden.frames);
    const last = golden.frames.length - 1;
    expect(s.currentT).toBe(last);
    expect(s.visibleRange).toEqual([last - 1, last]);
    expect(s.stripDepth).toBe(2);
  });

  it("clamps currentT to the loaded range", () => {
    let s = createViewState(golden.frames);
    s = setCurrentT(s, golden.frames, 999);
    expect(s.currentT).toBe(golden.frames.length - 1);
    s = setCurrentT(s, golden.frames, -5);
    expect(s.currentT).toBe(0);
    expect(s.visibleRange).toEqual([0, 0]);
  });

  it("keeps the visible range non-empty at any depth", () => {
    let s = createViewState(golden.frames);
    s = setStripDepth(s, golden.frames, 10);
    expect(s.visibleRange[0]).toBeLessThanOrEqual(s.visibleRange[1]);
    expect(s.visibleRange).toEqual([0, golden.frames.length - 1]);
  });
});

describe("composite scene", () => {
  it("shows the currentT frame in the main panel and the trailing window in the strip", () => {
    const s = setCurrentT(createViewState(golden.frames), golden.frames, 2);
    const scene = buildTimelineScene(golden, s);
    expect(scene.main.t).toBe(2);
    expect(scene.strip.map((x) => x.t)).toEqual([1, 2]);
  });

  it("shows one thumbnail for a single-frame document", () => {
    const doc: FrameSet = { frames: [golden.frames[0]] };
    const scene = buildTimelineScene(doc, createViewState(doc.frames));
    expect(scene.strip).toHaveLength(1);
    expect(scene.strip[0].t).toBe(0);
  });

  it("clicking a strip entry moves the main panel to that snapshot", () => {
    let s = createViewState(golden.frames);
    const before = buildTimelineScene(golden, s);
    const clicked = before.strip[0].t;
    s = setCurrentT(s, golden.frames, clicked);
    expect(buildTimelineScene(golden, s).main.t).toBe(clicked);
  });

  it("scrolling back to t=0 shows the initial snapshot as all triangles", () => {
    let s = createViewState(golden.frames);
    for (let i = 0; i < golden.frames.length; i++) s = scrollBy(s, golden.frames, -1);
    expect(s.currentT).toBe(0);
    const scene = buildTimelineScene(golden, s);
    expect(scene.main.t).toBe(0);
    expect(scene.main.glyphs.every((g) => g.shape === "triangle")).toBe(true);
  });

  it("highlights a hovered node in every visible snapshot it appears in", () => {
    // pick a node alive in both of the last two frames
    const last = golden.frames.at(-1)!;
    const prevIds = new Set(golden.frames.at(-2)!.nodes.map((n) => n.id));
    const id = last.nodes.find((n) => prevIds.has(n.id))!.id;
    const s = hoverNode(createViewState(golden.frames), id);
    const scene = buildTimelineScene(golden, s);
    for (const panel of [scene.main, ...scene.strip]) {
      for (const g of panel.glyphs) {
        expect(g.highlighted).toBe(g.id === id);
      }
    }
  });

  it("pins a community consistently across the strip and main panel", () => {
    const c = golden.frames.at(-1)!.nodes[0].community;
    const s = pinCommunity(createViewState(golden.frames), c);
    const scene = buildTimelineScene(golden, s);
    let hits = 0;
    for (const panel of [scene.main, ...scene.strip]) {
      for (const g of panel.glyphs) {
        expect(g.highlighted).toBe(g.community === c);
        if (g.highlighted) hits++;
      }
    }
    expect(hits).toBeGreaterThan(0);
  });

  it("rebuilds an identical scene for an identical view state", () => {
    const s = setCurrentT(createViewState(golden.frames), golden.frames, 1);
    expect(buildTimelineScene(golden, s)).toEqual(buildTimelineScene(golden, s));
  });
});
