/**
 * Selection state shared by the four coordinated views.
 *
 * Invariants enforced on every transition: a selected chain or pattern cell
 * implies a selected network; changing the network clears the finer
 * selections and the node filters (they describe the old network's nodes).
 * State changes happen only through these methods or deep-link restore.
 */

import { PATTERNS } from "./types.js";

export type ColorMode = "business_type" | "size_class";

export interface Toggles {
  badges_on: boolean;
  edge_width_on: boolean;
  color_mode: ColorMode;
  expanded_view: boolean;
}

export interface Filters {
  exposure?: [number, number];
  registered_capital?: [number, number];
  business_type?: string[];
  size_class?: string[];
}

export interface SelectionState {
  selected_network: number | null;
  selected_pattern_cell: string | null;
  selected_chain: number | null;
  filters: Filters;
  toggles: Toggles;
}

export function initialState(): SelectionState {
  return {
    selected_network: null,
    selected_pattern_cell: null,
    selected_chain: null,
    filters: {},
    toggles: {
      badges_on: false,
      edge_width_on: false,
      color_mode: "business_type",
      expanded_view: false,
    },
  };
}

export type Listener = (state: SelectionState) => void;

export class SelectionStore {
  private state: SelectionState = initialState();
  private listeners: Listener[] = [];

  current(): SelectionState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  selectNetwork(id: number | null): void {
    if (id === this.state.selected_network) return;
    this.state = {
      ...this.state,
      selected_network: id,
      selected_pattern_cell: null,
      selected_chain: null,
      filters: {},
    };
    this.emit();
  }

  selectPatternCell(pattern: string | null): void {
    if (pattern !== null && this.state.selected_network === null) {
      throw new Error("pattern cell selection requires a selected network");
    }
    this.state = { ...this.state, selected_pattern_cell: pattern, selected_chain: null };
    this.emit();
  }

  selectChain(id: number | null): void {
    if (id !== null && this.state.selected_network === null) {
      throw new Error("chain selection requires a selected network");
    }
    this.state = { ...this.state, selected_chain: id };
    this.emit();
  }

  setFilters(filters: Filters): void {
    this.state = { ...this.state, filters: { ...filters } };
    this.emit();
  }

  setToggle<K extends keyof Toggles>(key: K, value: Toggles[K]): void {
    this.state = { ...this.state, toggles: { ...this.state.toggles, [key]: value } };
    this.emit();
  }
}

// ---------------------------------------------------------------------------
// Deep links: the whole SelectionState round-trips through a query string so
// a console view can be bookmarked and restored.

function rangeToken(range: [number, number]): string {
  return `${range[0]}~${range[1]}`;
}

function parseRange(token: string): [number, number] | undefined {
  const parts = token.split("~").map(Number);
  if (parts.length !== 2 || parts.some((v) => !Number.isFinite(v))) return undefined;
  return [parts[0], parts[1]];
}

export function serializeState(state: SelectionState): string {
  const params = new URLSearchParams();
  if (state.selected_network !== null) params.set("net", String(state.selected_network));
  if (state.selected_pattern_cell !== null) params.set("cell", state.selected_pattern_cell);
  if (state.selected_chain !== null) params.set("chain", String(state.selected_chain));
  if (state.filters.exposure) params.set("fexp", rangeToken(state.filters.exposure));
  if (state.filters.registered_capital) params.set("fcap", rangeToken(state.filters.registered_capital));
  if (state.filters.business_type?.length) params.set("fbt", state.filters.business_type.join(","));
  if (state.filters.size_class?.length) params.set("fsc", state.filters.size_class.join(","));
  const t = state.toggles;
  if (t.badges_on) params.set("badges", "1");
  if (t.edge_width_on) params.set("widths", "1");
  if (t.expanded_view) params.set("expanded", "1");
  if (t.color_mode !== "business_type") params.set("color", t.color_mode);
  return params.toString();
}

export interface ParsedDeepLink {
  network: number | null;
  pattern: string | null;
  chain: number | null;
  filters: Filters;
  toggles: Toggles;
}

export function parseDeepLink(query: string): ParsedDeepLink {
  const params = new URLSearchParams(query);
  const numeric = (key: string): number | null => {
    const raw = params.get(key);
    if (raw === null) return null;
    const value = Number(raw);
    return Number.isInteger(value) && value >= 0 ? value : null;
  };
  const cell = params.get("cell");
  const filters: Filters = {};
  const exposure = params.get("fexp");
  if (exposure) filters.exposure = parseRange(exposure);
  const capital = params.get("fcap");
  if (capital) filters.registered_capital = parseRange(capital);
  const business = params.get("fbt");
  if (business) filters.business_type = business.split(",").filter(Boolean);
  const size = params.get("fsc");
  if (size) filters.size_class = size.split(",").filter(Boolean);
  return {
    network: numeric("net"),
    pattern: cell && (PATTERNS as readonly string[]).includes(cell) ? cell : null,
    chain: numeric("chain"),
    filters,
    toggles: {
      badges_on: params.get("badges") === "1",
      edge_width_on: params.get("widths") === "1",
      expanded_view: params.get("expanded") === "1",
      color_mode: params.get("color") === "size_class" ? "size_class" : "business_type",
    },
  };
}
