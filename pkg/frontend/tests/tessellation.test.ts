// Acceptance: tessellation renders networks in strictly non-increasing
// node-count order; badge slice angles per network sum to 360 (+-0.01) or
// the badge degrades to an outline ring when the network has no chains.

import { describe, expect, it } from "vitest";

import { badgeArcPaths, badgeSlices, isRingOnly } from "../src/badge.js";
import { tessellationOrder } from "../src/layout.js";
import { FixtureApi } from "./fakeapi.js";

const api = new FixtureApi();

describe("tessellation order", () => {
  it("is non-increasing in node count over the fixture bundle", async () => {
    const ordered = tessellationOrder(await api.listNetworks());
    for (let i = 1; i < ordered.length; i++) {
      expect(ordered[i].node_count).toBeLessThanOrEqual(ordered[i - 1].node_count);
    }
    // the fixture sizes are strictly decreasing, so the order is strict here
    const sizes = ordered.map((n) => n.node_count);
    expect(sizes).toEqual([...sizes].sort((a, b) => b - a));
    expect(new Set(sizes).size).toBe(sizes.length);
  });

  it("breaks node-count ties by ascending network id", () => {
    const ordered = tessellationOrder([
      { network_id: 7, node_count: 5 },
      { network_id: 2, node_count: 5 },
      { network_id: 1, node_count: 9 },
    ]);
    expect(ordered.map((n) => n.network_id)).toEqual([1, 2, 7]);
  });
});

describe("badge geometry", () => {
  it("slice angles sum to 360 within 0.01 degrees for every chained network", async () => {
    for (const summary of await api.listNetworks()) {
      if (isRingOnly(summary.chain_count)) continue;
      const total = badgeSlices(summary.pq).reduce((a, b) => a + b, 0);
      expect(Math.abs(total - 360)).toBeLessThanOrEqual(0.01);
      // the served slices agree with the client-side computation
      const served = summary.slices.reduce((a, b) => a + b, 0);
      expect(Math.abs(served - total)).toBeLessThanOrEqual(1e-9);
    }
  });

  it("renders zero-chain networks as an outline ring", async () => {
    const networks = await api.listNetworks();
    const empty = networks.find((n) => n.chain_count === 0)!;
    expect(empty).toBeDefined();
    expect(isRingOnly(empty.chain_count)).toBe(true);
    expect(badgeSlices(empty.pq).every((angle) => angle === 0)).toBe(true);
    expect(badgeArcPaths(empty.pq, 0, 0, 10)).toEqual([]); // nothing to fill
  });

  it("emits one arc per nonzero share with quadrant colors", async () => {
    const networks = await api.listNetworks();
    const triangle = networks.find((n) => n.network_id === 2)!; // single loop-mutual chain
    const arcs = badgeArcPaths(triangle.pq, 0, 0, 10);
    expect(arcs).toHaveLength(1);
    expect(arcs[0].quadrant).toBe("QIII");
    expect(arcs[0].color).toBe("#d73027");
    expect(arcs[0].endAngle - arcs[0].startAngle).toBeCloseTo(360, 3);
  });
});
