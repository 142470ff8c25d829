/** Scene-graph inspection against a golden frames file produced by the
 * detection/layout pipeline and committed verbatim. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { communityHue } from "../src/color.js";
import { FrameSet, SchemaError, maxPresence, maxWeight, parseFrames } from "../src/frames.js";
import { buildFrameScene, edgeWidth } from "../src/scene.js";

const here = dirname(fileURLToPath(import.meta.url));
const goldenText = readFileSync(join(here, "golden_frames.json"), "utf8");

function loadGolden(): FrameSet {
  return parseFrames(goldenText);
}

function scenes(doc: FrameSet) {
  const opts = { maxPresence: maxPresence(doc.frames), maxWeight: maxWeight(doc.frames) };
  return doc.frames.map((f) => buildFrameScene(f, opts));
}

describe("golden frames load", () => {
  it("parses the pipeline output with no transformation", () => {
    const doc = loadGolden();
    // the validated document is structurally the raw JSON
    expect(doc).toEqual(JSON.parse(goldenText));
    expect(doc.frames.length).toBeGreaterThan(1);
  });
});

describe("glyph shapes", () => {
  it("draws every initial node as a triangle in every frame", () => {
    const doc = loadGolden();
    let initialSeen = 0;
    for (const scene of scenes(doc)) {
      const frame = doc.frames[scene.t];
      for (const glyph of scene.glyphs) {
        const node = frame.nodes.find((n) => n.id === glyph.id)!;
        expect(glyph.shape).toBe(node.initial ? "triangle" : "circle");
        if (node.initial) initialSeen++;
      }
    }
    expect(initialSeen).toBeGreaterThan(0);
  });

  it("draws only circles for nodes that joined after the first snapshot", () => {
    const doc = loadGolden();
    const first = new Set(doc.frames[0].nodes.map((n) => n.id));
    const later = scenes(doc).flatMap((s) => s.glyphs.filter((g) => !first.has(g.id)));
    expect(later.length).toBeGreaterThan(0);
    expect(later.every((g) => g.shape === "circle")).toBe(true);
  });
});

describe("fill darkness", () => {
  it("is monotone in presence across the whole sequence", () => {
    const doc = loadGolden();
    const byPresence = new Map<number, Set<number>>();
    for (const scene of scenes(doc)) {
      for (const g of scene.glyphs) {
        if (!byPresence.has(g.presence)) byPresence.set(g.presence, new Set());
        byPresence.get(g.presence)!.add(g.fill.l);
      }
    }
    const presences = [...byPresence.keys()].sort((a, b) => a - b);
    expect(presences.length).toBeGreaterThan(1);
    for (const p of presences) expect(byPresence.get(p)!.size).toBe(1);
    for (let i = 1; i < presences.length; i++) {
      const lighter = [...byPresence.get(presences[i - 1])!][0];
      const darker = [...byPresence.get(presences[i])!][0];
      expect(darker).toBeLessThan(lighter);
    }
  });

  it("renders a frequently seen node strictly darker than a newcomer", () => {
    const doc = loadGolden();
    const last = scenes(doc).at(-1)!;
    const veterans = last.glyphs.filter((g) => g.presence === doc.frames.length);
    const fresh = last.glyphs.filter((g) => g.presence === 1);
    expect(veterans.length).toBeGreaterThan(0);
    expect(fresh.length).toBeGreaterThan(0);
    expect(veterans[0].fill.l).toBeLessThan(fresh[0].fill.l);
  });
});

describe("community color", () => {
  it("keeps one hue per community id constant across all frames", () => {
    const doc = loadGolden();
    const hueOf = new Map<number, number>();
    for (const scene of scenes(doc)) {
      for (const g of scene.glyphs) {
        if (hueOf.has(g.community)) {
          expect(g.fill.h).toBe(hueOf.get(g.community));
        } else {
          hueOf.set(g.community, g.fill.h);
        }
      }
    }
    expect(hueOf.size).toBeGreaterThan(1);
  });

  it("uses a single hue for a single-community frame", () => {
    const frame = {
      t: 0,
      nodes: [
        { id: "a", x: 0, y: 0, community: 4, presence: 1, initial: true },
        { id: "b", x: 1, y: 0, community: 4, presence: 1, initial: false },
      ],
      edges: [{ s: "a", d: "b", w: 2 }],
    };
    const scene = buildFrameScene(frame, { maxPresence: 1, maxWeight: 2 });
    const hues = new Set(scene.glyphs.map((g) => g.fill.h));
    expect(hues.size).toBe(1);
    expect([...hues][0]).toBe(communityHue(4));
  });
});

describe("edge encoding", () => {
  it("makes thickness strictly monotone in weight", () => {
    const doc = loadGolden();
    const m = maxWeight(doc.frames);
    const weights = [...new Set(doc.frames.flatMap((f) => f.edges.map((e) => e.w)))]
      .sort((a, b) => a - b);
    expect(weights.length).toBeGreaterThan(1);
    for (let i = 1; i < weights.length; i++) {
      expect(edgeWidth(weights[i], m)).toBeGreaterThan(edgeWidth(weights[i - 1], m));
    }
  });

  it("places segments at the endpoint node coordinates", () => {
    const doc = loadGolden();
    for (const scene of scenes(doc)) {
      const at = new Map(scene.glyphs.map((g) => [g.id, g]));
      for (const e of scene.edges) {
        expect([e.x1, e.y1]).toEqual([at.get(e.s)!.x, at.get(e.s)!.y]);
        expect([e.x2, e.y2]).toEqual([at.get(e.d)!.x, at.get(e.d)!.y]);
      }
    }
  });
});

describe("schema validation", () => {
  it("rejects a node missing the presence field", () => {
    const doc = JSON.parse(goldenText);
    delete doc.frames[0].nodes[0].presence;
    expect(() => parseFrames(JSON.stringify(doc))).toThrow(SchemaError);
  });

  it("rejects edges pointing at unknown nodes", () => {
    const doc = JSON.parse(goldenText);
    doc.frames[0].edges.push({ s: "no-such", d: doc.frames[0].nodes[0].id, w: 1 });
    expect(() => parseFrames(JSON.stringify(doc))).toThrow(SchemaError);
  });

  it("rejects non-JSON input", () => {
    expect(() => parseFrames("not json")).toThrow(SchemaError);
  });
});

describe("purity", () => {
  it("never mutates frame data and rebuilds identical scenes", () => {
    const doc = loadGolden();
    const snapshot = JSON.parse(JSON.stringify(doc));
    const opts = { maxPresence: maxPresence(doc.frames), maxWeight: maxWeight(doc.frames) };
    const once = doc.frames.map((f) => buildFrameScene(f, opts));
    const twice = doc.frames.map((f) => buildFrameScene(f, opts));
    expect(once).toEqual(twice);
    expect(doc).toEqual(snapshot);
  });
});
