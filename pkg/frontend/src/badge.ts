/**
 * Contagion effect badge geometry: a four-slice pie whose radius encodes
 * the network's exposure relative to the riskiest network and whose slices
 * encode the instance share per contagion behavior. Networks without
 * chains render as an outline ring so they stay visible.
 */

import { QUADRANTS } from "./types.js";

export const QUADRANT_COLORS: Record<string, string> = {
  QI: "#1a9850", // chain-like: safe
  QII: "#fee08b", // mutual: low
  QIII: "#d73027", // loop-mutual: high
  QIV: "#fc8d59", // star-like: middle
};

export function badgeSlices(pq: number[]): number[] {
  return pq.map((share) => share * 360);
}

export function isRingOnly(chainCount: number): boolean {
  return chainCount === 0;
}

export interface SlicePath {
  quadrant: string;
  color: string;
  startAngle: number;
  endAngle: number;
  path: string;
}

function polar(cx: number, cy: number, radius: number, angleDeg: number): [number, number] {
  const rad = ((angleDeg - 90) * Math.PI) / 180; // 0 degrees at 12 o'clock
  return [cx + radius * Math.cos(rad), cy + radius * Math.sin(rad)];
}

/** Pie slice paths for one badge; zero-angle slices are omitted. */
export function badgeArcPaths(pq: number[], cx: number, cy: number, radius: number): SlicePath[] {
  const paths: SlicePath[] = [];
  let angle = 0;
  pq.forEach((share, i) => {
    const span = share * 360;
    if (span <= 0) return;
    const quadrant = QUADRANTS[i];
    const start = angle;
    const end = angle + span;
    angle = end;
    if (span >= 359.999) {
      paths.push({
        quadrant,
        color: QUADRANT_COLORS[quadrant],
        startAngle: start,
        endAngle: end,
        path:
          `M ${cx} ${cy - radius} ` +
          `A ${radius} ${radius} 0 1 1 ${cx - 0.01} ${cy - radius} Z`,
      });
      return;
    }
    const [x0, y0] = polar(cx, cy, radius, start);
    const [x1, y1] = polar(cx, cy, radius, end);
    const large = span > 180 ? 1 : 0;
    paths.push({
      quadrant,
      color: QUADRANT_COLORS[quadrant],
      startAngle: start,
      endAngle: end,
      path: `M ${cx} ${cy} L ${x0} ${y0} A ${radius} ${radius} 0 ${large} 1 ${x1} ${y1} Z`,
    });
  });
  return paths;
}
