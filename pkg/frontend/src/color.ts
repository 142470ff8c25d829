/** Community and presence color encoding.
 *
 * A fixed categorical palette is cycled by community id, so a given id keeps
 * the same hue in every frame of a session. Fill darkness grows linearly in
 * presence over the loaded sequence: the longer a node has been observed,
 * the darker it is drawn.
 */

export interface Hsl {
  h: number;
  s: number;
  l: number;
}

// 12 well-separated hues; ids beyond the palette wrap around
export const PALETTE_HUES: readonly number[] = [
  210, 30, 120, 275, 0, 55, 170, 330, 90, 250, 15, 145,
];

export function communityHue(community: number): number {
  const n = PALETTE_HUES.length;
  return PALETTE_HUES[((community % n) + n) % n];
}

// lightness from 85 (presence 1) down to 30 (max presence); darkness is
// 100 - l, so it is strictly increasing in presence
const L_HI = 85;
const L_LO = 30;

export function presenceLightness(presence: number, max: number): number {
  const span = Math.max(max, 1) - 1;
  const frac = span === 0 ? 1 : (presence - 1) / span;
  return L_HI - (L_HI - L_LO) * frac;
}

export function nodeFill(community: number, presence: number, max: number): Hsl {
  return { h: communityHue(community), s: 70, l: presenceLightness(presence, max) };
}

export function hslStyle(c: Hsl): string {
  return `hsl(${c.h}, ${c.s}%, ${c.l}%)`;
}
