/**
 * Coordinator for the four views: owns the selection store, fetches view
 * data through the API client, and exposes derived models (visible chains,
 * chain highlight) that views render from.
 *
 * Every fetch is guarded by a per-view token so a response landing after
 * the selection moved on is dropped instead of clobbering fresher data.
 */

import type { ApiClient } from "./api.js";
import { chainsTouching, filterNodes } from "./crossfilter.js";
import type { Filters } from "./state.js";
import { parseDeepLink, SelectionStore, serializeState } from "./state.js";
import type {
  CemResponse,
  ChainRecord,
  NetworkDetail,
  NetworkStats,
  NetworkSummary,
} from "./types.js";

export interface HighlightModel {
  chainId: number;
  nodeIds: Set<string>;
  edgeKeys: Set<string>; // "from->to" in contagion direction
  virusNodeIds: Set<string>; // every outbreak source gets a glyph
}

export function edgeKey(from: string, to: string): string {
  return `${from}->${to}`;
}

export interface ViewData {
  networks: NetworkSummary[];
  detail: NetworkDetail | null;
  cem: CemResponse | null;
  chains: ChainRecord[];
  stats: NetworkStats | null;
  chainDetail: ChainRecord | null;
}

export class ConsoleController {
  readonly store = new SelectionStore();
  readonly data: ViewData = {
    networks: [],
    detail: null,
    cem: null,
    chains: [],
    stats: null,
    chainDetail: null,
  };

  private tokens = { network: 0, cell: 0, chain: 0 };
  private dataListeners: Array<() => void> = [];
  private allChainsCache: { network: number; chains: ChainRecord[] } | null = null;

  constructor(private readonly api: ApiClient) {}

  onData(listener: () => void): () => void {
    this.dataListeners.push(listener);
    return () => {
      this.dataListeners = this.dataListeners.filter((l) => l !== listener);
    };
  }

  private emitData(): void {
    for (const listener of this.dataListeners) listener();
  }

  async init(): Promise<void> {
    this.data.networks = await this.api.listNetworks("size");
    this.emitData();
  }

  /** L1: pick a network; repopulates matrix, chains, and node views. */
  async selectNetwork(id: number | null): Promise<void> {
    this.store.selectNetwork(id);
    const token = ++this.tokens.network;
    ++this.tokens.cell;
    ++this.tokens.chain;
    this.data.detail = null;
    this.data.cem = null;
    this.data.stats = null;
    this.data.chains = [];
    this.data.chainDetail = null;
    this.emitData();
    if (id === null) return;
    const [detail, cem, stats] = await Promise.all([
      this.api.networkDetail(id),
      this.api.networkCem(id),
      this.api.networkStats(id),
    ]);
    if (token !== this.tokens.network) return; // selection moved on
    this.data.detail = detail;
    this.data.cem = cem;
    this.data.stats = stats;
    this.emitData();
  }

  /** L2: pick a matrix cell; loads that pattern's chain instances. */
  async selectPatternCell(pattern: string | null): Promise<void> {
    this.store.selectPatternCell(pattern);
    const token = ++this.tokens.cell;
    ++this.tokens.chain;
    this.data.chains = [];
    this.data.chainDetail = null;
    this.emitData();
    const network = this.store.current().selected_network;
    if (pattern === null || network === null) return;
    const chains = await this.api.networkChains(network, { pattern });
    if (token !== this.tokens.cell) return;
    this.data.chains = chains;
    this.emitData();
  }

  /** L3: pick a chain instance (e.g. a flower petal); loads the full chain. */
  async selectChain(id: number | null): Promise<void> {
    this.store.selectChain(id);
    const token = ++this.tokens.chain;
    this.data.chainDetail = null;
    this.emitData();
    if (id === null) return;
    const chain = await this.api.chainDetail(id);
    if (token !== this.tokens.chain) return;
    this.data.chainDetail = chain;
    this.emitData();
  }

  setFilters(filters: Filters): void {
    this.store.setFilters(filters);
    this.emitData();
  }

  /** Every chain of the selected network, unfiltered (cached per network). */
  async allNetworkChains(): Promise<ChainRecord[]> {
    const network = this.store.current().selected_network;
    if (network === null) return [];
    if (this.allChainsCache?.network === network) return this.allChainsCache.chains;
    const chains = await this.api.networkChains(network);
    this.allChainsCache = { network, chains };
    return chains;
  }

  /** Node ids of the selected network passing the active filters. */
  survivingNodeIds(): Set<string> | null {
    const detail = this.data.detail;
    if (!detail) return null;
    const filters = this.store.current().filters;
    if (Object.keys(filters).length === 0) return null; // no filtering active
    return new Set(filterNodes(detail.nodes, filters).map((node) => node.id));
  }

  /**
   * CIE content: always recomputed from the API result for the selected
   * (network, cell) plus the active filters, so the view cannot drift.
   */
  visibleChains(): ChainRecord[] {
    const surviving = this.survivingNodeIds();
    if (surviving === null) return this.data.chains;
    return chainsTouching(this.data.chains, surviving);
  }

  highlight(): HighlightModel | null {
    const chain = this.data.chainDetail;
    if (!chain) return null;
    return {
      chainId: chain.chain_id,
      nodeIds: new Set(chain.nodes),
      edgeKeys: new Set(chain.edges.map(([from, to]) => edgeKey(from, to))),
      virusNodeIds: new Set(chain.sources),
    };
  }

  deepLink(): string {
    return serializeState(this.store.current());
  }

  /** Restore a serialized console state, replaying the selection sequence. */
  async applyDeepLink(query: string): Promise<void> {
    const parsed = parseDeepLink(query);
    if (this.data.networks.length === 0) await this.init();
    await this.selectNetwork(parsed.network);
    if (parsed.network !== null && parsed.pattern !== null) {
      await this.selectPatternCell(parsed.pattern);
    }
    if (parsed.network !== null && parsed.chain !== null) {
      await this.selectChain(parsed.chain);
    }
    if (Object.keys(parsed.filters).length > 0) this.store.setFilters(parsed.filters);
    for (const key of ["badges_on", "edge_width_on", "color_mode", "expanded_view"] as const) {
      this.store.setToggle(key, parsed.toggles[key]);
    }
    this.emitData();
  }
}
