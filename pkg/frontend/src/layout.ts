/**
 * Tessellation ordering and the per-cell force layout.
 *
 * The layout is deterministic by construction: initial positions derive
 * from per-node id hashes and the simulation runs a fixed iteration budget
 * with no randomness, so reloading the same bundle reproduces identical
 * pictures.
 */

import { fnv1a } from "./rng.js";

export interface Point {
  x: number;
  y: number;
}

export function tessellationOrder<T extends { node_count: number; network_id: number }>(
  networks: T[],
): T[] {
  return [...networks].sort(
    (a, b) => b.node_count - a.node_count || a.network_id - b.network_id,
  );
}

export function forceLayout(
  nodeIds: string[],
  edges: [string, string][],
  width: number,
  height: number,
  iterations = 120,
): Map<string, Point> {
  const n = nodeIds.length;
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.38;
  const positions = new Map<string, Point>();
  for (const id of nodeIds) {
    const hash = fnv1a(id);
    const angle = ((hash % 3600) / 3600) * Math.PI * 2;
    const r = radius * (0.35 + 0.6 * (((hash >>> 12) % 1000) / 1000));
    positions.set(id, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  if (n <= 1) {
    for (const id of nodeIds) positions.set(id, { x: cx, y: cy });
    return positions;
  }

  const index = new Map(nodeIds.map((id, i) => [id, i]));
  const xs = nodeIds.map((id) => positions.get(id)!.x);
  const ys = nodeIds.map((id) => positions.get(id)!.y);
  const springLength = radius / Math.sqrt(n);
  const repulsion = springLength * springLength * 1.5;

  for (let iteration = 0; iteration < iterations; iteration++) {
    const cooling = 1 - iteration / iterations;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = xs[i] - xs[j];
        let dy = ys[i] - ys[j];
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-6) {
          // coincident points split along a hash-derived direction
          const angle = (fnv1a(nodeIds[i] + nodeIds[j]) % 628) / 100;
          dx = Math.cos(angle) * 0.01;
          dy = Math.sin(angle) * 0.01;
          d2 = 1e-4;
        }
        const push = repulsion / d2;
        fx[i] += dx * push;
        fy[i] += dy * push;
        fx[j] -= dx * push;
        fy[j] -= dy * push;
      }
    }
    for (const [a, b] of edges) {
      const i = index.get(a);
      const j = index.get(b);
      if (i === undefined || j === undefined) continue;
      const dx = xs[j] - xs[i];
      const dy = ys[j] - ys[i];
      const distance = Math.sqrt(dx * dx + dy * dy) || 1e-3;
      const pull = (distance - springLength) / distance / 2;
      fx[i] += dx * pull;
      fy[i] += dy * pull;
      fx[j] -= dx * pull;
      fy[j] -= dy * pull;
    }
    for (let i = 0; i < n; i++) {
      fx[i] += (cx - xs[i]) * 0.02;
      fy[i] += (cy - ys[i]) * 0.02;
      const magnitude = Math.sqrt(fx[i] * fx[i] + fy[i] * fy[i]);
      const cap = springLength * cooling + 0.5;
      const scale = magnitude > cap ? cap / magnitude : 1;
      xs[i] += fx[i] * scale;
      ys[i] += fy[i] * scale;
      xs[i] = Math.min(width - 4, Math.max(4, xs[i]));
      ys[i] = Math.min(height - 4, Math.max(4, ys[i]));
    }
  }
  nodeIds.forEach((id, i) => positions.set(id, { x: xs[i], y: ys[i] }));
  return positions;
}
