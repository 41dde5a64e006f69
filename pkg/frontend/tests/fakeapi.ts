/**
 * ApiClient over captured service responses, so tests consume the exact
 * wire bodies the analysis service emits without a running server.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { ApiClient, ChainFilter } from "../src/api.js";
import type {
  CemResponse,
  ChainRecord,
  NetworkDetail,
  NetworkStats,
  NetworkSummary,
} from "../src/types.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

function load<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, name), "utf-8")) as T;
}

export class FixtureApi implements ApiClient {
  readonly summaries: NetworkSummary[] = load("networks_list.json");
  readonly calls: string[] = [];

  private record(path: string): void {
    this.calls.push(path);
  }

  async listNetworks(sort: "size" | "id" = "size"): Promise<NetworkSummary[]> {
    this.record(`/api/networks?sort=${sort}`);
    const records = [...this.summaries];
    if (sort === "id") records.sort((a, b) => a.network_id - b.network_id);
    else records.sort((a, b) => b.node_count - a.node_count || a.network_id - b.network_id);
    return records;
  }

  async networkDetail(id: number): Promise<NetworkDetail> {
    this.record(`/api/networks/${id}`);
    return load(`network_detail_${id}.json`);
  }

  async networkCem(id: number): Promise<CemResponse> {
    this.record(`/api/networks/${id}/cem`);
    return load(`network_cem_${id}.json`);
  }

  async networkChains(id: number, filter: ChainFilter = {}): Promise<ChainRecord[]> {
    this.record(`/api/networks/${id}/chains`);
    let chains = load<ChainRecord[]>(`network_chains_${id}.json`);
    if (filter.pattern) chains = chains.filter((c) => c.pattern === filter.pattern);
    if (filter.quadrant) chains = chains.filter((c) => c.quadrant === filter.quadrant);
    return chains;
  }

  async chainDetail(id: number): Promise<ChainRecord> {
    this.record(`/api/chains/${id}`);
    for (const summary of this.summaries) {
      const chains = load<ChainRecord[]>(`network_chains_${summary.network_id}.json`);
      const match = chains.find((c) => c.chain_id === id);
      if (match) return match;
    }
    throw new Error(`chain ${id} not found`);
  }

  async networkStats(id: number): Promise<NetworkStats> {
    this.record(`/api/networks/${id}/stats`);
    return load(`network_stats_${id}.json`);
  }
}
