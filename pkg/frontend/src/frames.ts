/** Frame export schema produced by the layout pipeline, loaded verbatim. */

export interface FrameNode {
  id: string;
  x: number;
  y: number;
  community: number;
  presence: number;
  initial: boolean;
}

export interface FrameEdge {
  s: string;
  d: string;
  w: number;
}

export interface Frame {
  t: number;
  nodes: FrameNode[];
  edges: FrameEdge[];
}

export interface FrameSet {
  frames: Frame[];
}

/** Raised when a loaded document does not match the frame schema. */
export class SchemaError extends Error {
  constructor(path: string, detail: string) {
    super(`frames schema mismatch at ${path}: ${detail}`);
    this.name = "SchemaError";
  }
}

function expect(cond: boolean, path: string, detail: string): void {
  if (!cond) throw new SchemaError(path, detail);
}

function isNum(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

function checkNode(raw: unknown, path: string): FrameNode {
  expect(typeof raw === "object" && raw !== null, path, "not an object");
  const n = raw as Record<string, unknown>;
  expect(typeof n.id === "string", `${path}.id`, "expected string");
  expect(isNum(n.x), `${path}.x`, "expected finite number");
  expect(isNum(n.y), `${path}.y`, "expected finite number");
  expect(Number.isInteger(n.community), `${path}.community`, "expected integer");
  expect(Number.isInteger(n.presence) && (n.presence as number) >= 1,
         `${path}.presence`, "expected integer >= 1");
  expect(typeof n.initial === "boolean", `${path}.initial`, "expected boolean");
  return n as unknown as FrameNode;
}

function checkEdge(raw: unknown, path: string): FrameEdge {
  expect(typeof raw === "object" && raw !== null, path, "not an object");
  const e = raw as Record<string, unknown>;
  expect(typeof e.s === "string", `${path}.s`, "expected string");
  expect(typeof e.d === "string", `${path}.d`, "expected string");
  expect(isNum(e.w) && (e.w as number) > 0, `${path}.w`, "expected positive number");
  return e as unknown as FrameEdge;
}

function checkFrame(raw: unknown, path: string): Frame {
  expect(typeof raw === "object" && raw !== null, path, "not an object");
  const f = raw as Record<string, unknown>;
  expect(Number.isInteger(f.t) && (f.t as number) >= 0, `${path}.t`,
         "expected integer >= 0");
  expect(Array.isArray(f.nodes), `${path}.nodes`, "expected array");
  expect(Array.isArray(f.edges), `${path}.edges`, "expected array");
  const nodes = (f.nodes as unknown[]).map((n, i) => checkNode(n, `${path}.nodes[${i}]`));
  const ids = new Set(nodes.map((n) => n.id));
  expect(ids.size === nodes.length, `${path}.nodes`, "duplicate node id");
  const edges = (f.edges as unknown[]).map((e, i) => {
    const edge = checkEdge(e, `${path}.edges[${i}]`);
    expect(ids.has(edge.s) && ids.has(edge.d), `${path}.edges[${i}]`,
           "edge endpoint missing from nodes");
    return edge;
  });
  return { t: f.t as number, nodes, edges };
}

/** Parse and validate a frames document; the data is used as-is afterwards. */
export function parseFrames(text: string): FrameSet {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new SchemaError("$", `invalid JSON (${(err as Error).message})`);
  }
  expect(typeof raw === "object" && raw !== null, "$", "not an object");
  const doc = raw as Record<string, unknown>;
  expect(Array.isArray(doc.frames), "$.frames", "expected array");
  const frames = (doc.frames as unknown[]).map((f, i) => checkFrame(f, `$.frames[${i}]`));
  expect(frames.length >= 1, "$.frames", "at least one frame required");
  frames.forEach((f, i) => expect(f.t === i, `$.frames[${i}].t`,
                                  "frame index must equal position"));
  return { frames };
}

/** Greatest presence count over the whole loaded sequence. */
export function maxPresence(frames: Frame[]): number {
  let best = 1;
  for (const f of frames) for (const n of f.nodes) best = Math.max(best, n.presence);
  return best;
}

/** Greatest edge weight over the whole loaded sequence. */
export function maxWeight(frames: Frame[]): number {
  let best = 0;
  for (const f of frames) for (const e of f.edges) best = Math.max(best, e.w);
  return best;
}

/** Sorted list of every community id appearing in the sequence. */
export function communityIds(frames: Frame[]): number[] {
  const ids = new Set<number>();
  for (const f of frames) for (const n of f.nodes) ids.add(n.community);
  return [...ids].sort((a, b) => a - b);
}
