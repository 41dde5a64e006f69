// Acceptance: k chains at identical financial coordinates form one flower
// with k petals, and clicking petal i selects exactly chain i.

import { describe, expect, it } from "vitest";

import { ConsoleController } from "../src/controller.js";
import { chainsInWindow, groupFlowers, petalPaths } from "../src/flowers.js";
import { FixtureApi } from "./fakeapi.js";

const api = new FixtureApi();

describe("flower grouping", () => {
  it("groups the three coincident chains into one flower with three petals", async () => {
    const chains = await api.networkChains(1); // shared guarantor, identical financials
    expect(chains).toHaveLength(3);
    const flowers = groupFlowers(chains);
    expect(flowers).toHaveLength(1);
    const flower = flowers[0];
    expect(flower.count).toBe(3);
    expect(flower.x).toBe(250);
    expect(flower.y).toBe(600);
    const petals = petalPaths(flower, 100, 100, 14);
    expect(petals).toHaveLength(3);
    // petals map bijectively onto the coincident chains
    expect(new Set(petals.map((p) => p.chainId))).toEqual(
      new Set(chains.map((c) => c.chain_id)),
    );
  });

  it("keeps distinct coordinates apart (exact integer grouping)", async () => {
    const chains = await api.networkChains(0);
    const flowers = groupFlowers(chains);
    expect(flowers).toHaveLength(chains.length); // all distinct in this network
    for (const flower of flowers) expect(flower.count).toBe(1);
  });

  it("plots zero-exposure chains on the x-axis", async () => {
    const chains = await api.networkChains(0);
    const paidOff = chains.filter((c) => c.exposure === 0);
    expect(paidOff.length).toBeGreaterThan(0);
    const flowers = groupFlowers(paidOff);
    expect(flowers.every((f) => f.y === 0)).toBe(true);
  });

  it("clicking petal i selects exactly chain i (payload asserted)", async () => {
    const controller = new ConsoleController(api);
    await controller.init();
    await controller.selectNetwork(1);
    await controller.selectPatternCell("P1");
    const flower = groupFlowers(controller.visibleChains())[0];
    const petals = petalPaths(flower, 0, 0, 10);

    // the CIE binds each petal's click to selectChain(petal.chainId);
    // simulate the click on every petal and assert the selection payload
    for (const petal of petals) {
      const selections: Array<number | null> = [];
      const unsubscribe = controller.store.subscribe((state) =>
        selections.push(state.selected_chain),
      );
      await controller.selectChain(petal.chainId);
      unsubscribe();
      expect(selections[0]).toBe(petal.chainId);
      expect(controller.store.current().selected_chain).toBe(petal.chainId);
      expect(controller.data.chainDetail?.chain_id).toBe(petal.chainId);
    }
  });

  it("brush zoom regroups flowers within the window", async () => {
    const chains = await api.networkChains(0);
    const window = { x0: 0, x1: 400, y0: 0, y1: 1600 };
    const inside = chainsInWindow(chains, window);
    expect(inside.length).toBeGreaterThan(0);
    expect(inside.length).toBeLessThan(chains.length);
    for (const chain of inside) {
      expect(chain.guarantee_amount).toBeGreaterThanOrEqual(window.x0);
      expect(chain.guarantee_amount).toBeLessThanOrEqual(window.x1);
      expect(chain.exposure).toBeLessThanOrEqual(window.y1);
    }
    const flowers = groupFlowers(inside);
    expect(flowers.length).toBe(inside.length); // distinct points stay singletons
  });
});
