/**
 * Node-level cross-filtering for the node instance explorer: brushing one
 * financial histogram narrows the node set that feeds the other three, and
 * the surviving node set restricts which chains stay visible elsewhere.
 */

import type { Filters } from "./state.js";
import type {
  CategoryCountsWire,
  ChainRecord,
  CorporationNode,
  HistogramWire,
} from "./types.js";

export const HISTOGRAM_BINS = 10;

export function filterNodes(nodes: CorporationNode[], filters: Filters): CorporationNode[] {
  return nodes.filter((node) => {
    if (filters.exposure) {
      const [lo, hi] = filters.exposure;
      if (node.exposure < lo || node.exposure > hi) return false;
    }
    if (filters.registered_capital) {
      const [lo, hi] = filters.registered_capital;
      if (node.registered_capital < lo || node.registered_capital > hi) return false;
    }
    if (filters.business_type?.length && !filters.business_type.includes(node.business_type)) {
      return false;
    }
    if (filters.size_class?.length && !filters.size_class.includes(node.size_class)) {
      return false;
    }
    return true;
  });
}

/** Same shape as the service's histograms: equal-width bins from 0 to max. */
export function histogramOf(values: number[], bins = HISTOGRAM_BINS): HistogramWire {
  if (values.length === 0) return { bin_edges: [0, 0], counts: [0] };
  const top = Math.max(...values);
  if (top <= 0) return { bin_edges: [0, 0], counts: [values.length] };
  const width = top / bins;
  const counts = new Array<number>(bins).fill(0);
  for (const value of values) {
    counts[Math.min(Math.floor(value / width), bins - 1)] += 1;
  }
  const edges = Array.from({ length: bins + 1 }, (_, i) => width * i);
  return { bin_edges: edges, counts };
}

export function categoryCountsOf(values: string[]): CategoryCountsWire {
  const counts = new Map<string, number>();
  for (const value of values) counts.set(value, (counts.get(value) ?? 0) + 1);
  const categories = [...counts.keys()].sort();
  return { categories, counts: categories.map((c) => counts.get(c)!) };
}

/** Chains still visible once node filters applied: any member node survives. */
export function chainsTouching(chains: ChainRecord[], surviving: Set<string>): ChainRecord[] {
  return chains.filter((chain) => chain.nodes.some((node) => surviving.has(node)));
}

/**
 * The chain a corporation would ignite: the chain listing it as an outbreak
 * source, falling back to any chain containing it (guarantors sit inside
 * chains they cannot start).
 */
export function findChainForNode(chains: ChainRecord[], nodeId: string): ChainRecord | null {
  return (
    chains.find((chain) => chain.sources.includes(nodeId)) ??
    chains.find((chain) => chain.nodes.includes(nodeId)) ??
    null
  );
}

export interface Bubble {
  id: string;
  exposure: number;
  registered_capital: number;
}

export function bubbleData(nodes: CorporationNode[]): Bubble[] {
  return nodes.map((node) => ({
    id: node.id,
    exposure: node.exposure,
    registered_capital: node.registered_capital,
  }));
}
