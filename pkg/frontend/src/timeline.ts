/** Timeline view state and composite scene construction.
 *
 * The main panel shows the frame at currentT; an axial strip of small
 * multiples shows the trailing window of snapshots (depth configurable,
 * default 2). All state transitions return fresh ViewState objects.
 */

import { Frame, FrameSet, maxPresence, maxWeight } from "./frames.js";
import { FrameScene, buildFrameScene } from "./scene.js";

export interface ViewState {
  currentT: number;
  pinnedCommunity: number | null;
  /** inclusive [tStart, tEnd] window shown in the axial strip */
  visibleRange: [number, number];
  modeLabel: string;
  hoveredNode: string | null;
  stripDepth: number;
}

export interface TimelineScene {
  main: FrameScene;
  strip: FrameScene[];
}

function clamp(t: number, lo: number, hi: number): number {
  return Math.min(Math.max(t, lo), hi);
}

function rangeFor(t: number, depth: number): [number, number] {
  return [Math.max(0, t - depth + 1), t];
}

export function createViewState(frames: Frame[], modeLabel = "frames.json",
                                stripDepth = 2): ViewState {
  const t = frames.length - 1;
  return {
    currentT: t,
    pinnedCommunity: null,
    visibleRange: rangeFor(t, stripDepth),
    modeLabel,
    hoveredNode: null,
    stripDepth,
  };
}

/** Move the timeline to t (clicking a strip entry or scrolling history). */
export function setCurrentT(state: ViewState, frames: Frame[], t: number): ViewState {
  const clamped = clamp(Math.round(t), 0, frames.length - 1);
  return { ...state, currentT: clamped,
           visibleRange: rangeFor(clamped, state.stripDepth) };
}

export function scrollBy(state: ViewState, frames: Frame[], delta: number): ViewState {
  return setCurrentT(state, frames, state.currentT + delta);
}

export function hoverNode(state: ViewState, id: string | null): ViewState {
  return { ...state, hoveredNode: id };
}

export function pinCommunity(state: ViewState, community: number | null): ViewState {
  return { ...state, pinnedCommunity: community };
}

export function setStripDepth(state: ViewState, frames: Frame[],
                              depth: number): ViewState {
  const d = Math.max(1, Math.round(depth));
  return setCurrentT({ ...state, stripDepth: d }, frames, state.currentT);
}

/** Build the composite scene: hover and pin apply to every visible snapshot,
 * so a node or community can be followed across time. */
export function buildTimelineScene(doc: FrameSet, state: ViewState): TimelineScene {
  const frames = doc.frames;
  const opts = {
    maxPresence: maxPresence(frames),
    maxWeight: maxWeight(frames),
    hoveredNode: state.hoveredNode,
    pinnedCommunity: state.pinnedCommunity,
  };
  const [lo, hi] = state.visibleRange;
  const strip: FrameScene[] = [];
  for (let t = lo; t <= hi; t++) strip.push(buildFrameScene(frames[t], opts));
  return { main: buildFrameScene(frames[state.currentT], opts), strip };
}
