/** Pure scene construction: frames plus view state in, drawable scene out.
 *
 * The scene is plain data (glyphs and segments) so tests can inspect the
 * drawing without a DOM, and so rendering stays a dumb projection of it.
 * Frame data is never mutated.
 */

import { Frame } from "./frames.js";
import { Hsl, nodeFill } from "./color.js";

export type GlyphShape = "circle" | "triangle";

export interface NodeGlyph {
  id: string;
  shape: GlyphShape;
  x: number;
  y: number;
  size: number;
  fill: Hsl;
  community: number;
  presence: number;
  highlighted: boolean;
}

export interface EdgeSegment {
  s: string;
  d: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  width: number;
  weight: number;
}

export interface FrameScene {
  t: number;
  glyphs: NodeGlyph[];
  edges: EdgeSegment[];
}

export interface SceneOptions {
  /** greatest presence over the loaded sequence, scales darkness */
  maxPresence: number;
  /** greatest edge weight over the loaded sequence, scales thickness */
  maxWeight: number;
  hoveredNode?: string | null;
  pinnedCommunity?: number | null;
  nodeSize?: number;
}

const EDGE_W_MIN = 0.4;
const EDGE_W_MAX = 3.0;

export function edgeWidth(weight: number, maxWeight: number): number {
  const m = Math.max(maxWeight, weight, 1e-12);
  return EDGE_W_MIN + (EDGE_W_MAX - EDGE_W_MIN) * (weight / m);
}

export function buildFrameScene(frame: Frame, opts: SceneOptions): FrameScene {
  const size = opts.nodeSize ?? 6;
  const pos = new Map(frame.nodes.map((n) => [n.id, n]));
  const glyphs: NodeGlyph[] = frame.nodes.map((n) => ({
    id: n.id,
    shape: n.initial ? "triangle" : "circle",
    x: n.x,
    y: n.y,
    size,
    fill: nodeFill(n.community, n.presence, opts.maxPresence),
    community: n.community,
    presence: n.presence,
    highlighted: opts.hoveredNode === n.id
      || (opts.pinnedCommunity != null && opts.pinnedCommunity === n.community),
  }));
  const edges: EdgeSegment[] = frame.edges.map((e) => {
    const a = pos.get(e.s)!;
    const b = pos.get(e.d)!;
    return {
      s: e.s, d: e.d,
      x1: a.x, y1: a.y, x2: b.x, y2: b.y,
      width: edgeWidth(e.w, opts.maxWeight),
      weight: e.w,
    };
  });
  return { t: frame.t, glyphs, edges };
}
