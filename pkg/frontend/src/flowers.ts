/**
 * Flower-petal grouping for the chain instance explorer.
 *
 * Chains plot at (total guarantee amount, exposure); amounts are exact
 * integer minor units, so chains sharing both coordinates are truly
 * coincident and merge into one flower with one clickable petal per chain
 * and the count in the center. Near-coincidence is handled by brush-zoom,
 * never by tolerance-based grouping, so counts stay exact.
 */

import type { ChainRecord } from "./types.js";

export interface Flower {
  x: number; // guarantee_amount
  y: number; // exposure
  chains: ChainRecord[];
  count: number;
}

export function groupFlowers(chains: ChainRecord[]): Flower[] {
  const groups = new Map<string, ChainRecord[]>();
  for (const chain of chains) {
    const key = `${chain.guarantee_amount}:${chain.exposure}`;
    const group = groups.get(key);
    if (group) group.push(chain);
    else groups.set(key, [chain]);
  }
  const flowers = [...groups.values()].map((group) => {
    const sorted = [...group].sort((a, b) => a.chain_id - b.chain_id);
    return {
      x: sorted[0].guarantee_amount,
      y: sorted[0].exposure,
      chains: sorted,
      count: sorted.length,
    };
  });
  flowers.sort((a, b) => a.x - b.x || a.y - b.y);
  return flowers;
}

export interface Petal {
  chainId: number;
  index: number;
  angle: number; // degrees, petal axis
  path: string;
}

/** One petal per coincident chain, fanned around the flower center. */
export function petalPaths(flower: Flower, cx: number, cy: number, size: number): Petal[] {
  const k = flower.count;
  return flower.chains.map((chain, index) => {
    const angle = (360 / k) * index - 90;
    const rad = (angle * Math.PI) / 180;
    const tipX = cx + size * Math.cos(rad);
    const tipY = cy + size * Math.sin(rad);
    const widthRad = Math.PI / Math.max(k, 3);
    const leftX = cx + size * 0.55 * Math.cos(rad - widthRad);
    const leftY = cy + size * 0.55 * Math.sin(rad - widthRad);
    const rightX = cx + size * 0.55 * Math.cos(rad + widthRad);
    const rightY = cy + size * 0.55 * Math.sin(rad + widthRad);
    return {
      chainId: chain.chain_id,
      index,
      angle,
      path:
        `M ${cx} ${cy} Q ${leftX} ${leftY} ${tipX} ${tipY} ` +
        `Q ${rightX} ${rightY} ${cx} ${cy} Z`,
    };
  });
}

export interface ZoomWindow {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

export function chainsInWindow(chains: ChainRecord[], window: ZoomWindow): ChainRecord[] {
  return chains.filter(
    (chain) =>
      chain.guarantee_amount >= window.x0 &&
      chain.guarantee_amount <= window.x1 &&
      chain.exposure >= window.y0 &&
      chain.exposure <= window.y1,
  );
}
