import { describe, expect, it } from "vitest";

import {
  initialState,
  parseDeepLink,
  SelectionStore,
  serializeState,
} from "../src/state.js";

describe("selection invariants", () => {
  it("chain and cell selection require a network", () => {
    const store = new SelectionStore();
    expect(() => store.selectPatternCell("P8")).toThrow();
    expect(() => store.selectChain(3)).toThrow();
    store.selectNetwork(1);
    store.selectPatternCell("P8");
    store.selectChain(3);
    expect(store.current().selected_chain).toBe(3);
  });

  it("changing network clears the finer selections and filters", () => {
    const store = new SelectionStore();
    store.selectNetwork(1);
    store.selectPatternCell("P5");
    store.selectChain(8);
    store.setFilters({ exposure: [0, 100] });
    store.selectNetwork(2);
    const state = store.current();
    expect(state.selected_pattern_cell).toBeNull();
    expect(state.selected_chain).toBeNull();
    expect(state.filters).toEqual({});
  });

  it("changing cell clears the chain", () => {
    const store = new SelectionStore();
    store.selectNetwork(1);
    store.selectPatternCell("P5");
    store.selectChain(8);
    store.selectPatternCell("P1");
    expect(store.current().selected_chain).toBeNull();
  });

  it("notifies subscribers once per transition", () => {
    const store = new SelectionStore();
    let count = 0;
    store.subscribe(() => count++);
    store.selectNetwork(4);
    store.selectNetwork(4); // no-op, already selected
    store.selectPatternCell("P2");
    expect(count).toBe(2);
  });
});

describe("deep links", () => {
  it("round-trips the full selection state", () => {
    const store = new SelectionStore();
    store.selectNetwork(2);
    store.selectPatternCell("P5");
    store.selectChain(8);
    store.setFilters({
      exposure: [10, 900],
      business_type: ["retail", "services"],
    });
    store.setToggle("badges_on", true);
    store.setToggle("color_mode", "size_class");

    const query = serializeState(store.current());
    const parsed = parseDeepLink(query);
    expect(parsed.network).toBe(2);
    expect(parsed.pattern).toBe("P5");
    expect(parsed.chain).toBe(8);
    expect(parsed.filters.exposure).toEqual([10, 900]);
    expect(parsed.filters.business_type).toEqual(["retail", "services"]);
    expect(parsed.toggles.badges_on).toBe(true);
    expect(parsed.toggles.color_mode).toBe("size_class");
  });

  it("empty state serializes to an empty query", () => {
    expect(serializeState(initialState())).toBe("");
    const parsed = parseDeepLink("");
    expect(parsed.network).toBeNull();
    expect(parsed.pattern).toBeNull();
    expect(parsed.chain).toBeNull();
  });

  it("rejects malformed values instead of guessing", () => {
    const parsed = parseDeepLink("net=abc&cell=P99&chain=-4&fexp=1~x");
    expect(parsed.network).toBeNull();
    expect(parsed.pattern).toBeNull();
    expect(parsed.chain).toBeNull();
    expect(parsed.filters.exposure).toBeUndefined();
  });
});
