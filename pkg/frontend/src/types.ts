/** Wire types mirroring the analysis service's JSON bodies. */

export interface CellSummary {
  pattern: string;
  f: number;
  v: number;
  effect: number;
}

export interface NetworkSummary {
  network_id: number;
  node_count: number;
  edge_count: number;
  eda: number;
  cells: CellSummary[];
  pq: number[];
  radius_rel: number;
  slices: number[];
  chain_count: number;
}

export interface CorporationNode {
  id: string;
  name: string | null;
  business_type: string;
  size_class: string;
  registered_capital: number;
  exposure: number;
}

export interface GuaranteeEdgeWire {
  guarantor_id: string;
  borrower_id: string;
  amount: number;
}

export interface NetworkDetail {
  network_id: number;
  node_count: number;
  edge_count: number;
  nodes: CorporationNode[];
  edges: GuaranteeEdgeWire[];
}

export interface CemCell {
  pattern: string;
  quadrant: string;
  color: string;
  row: number;
  col: number;
  range_of_influence: string;
  canonical_nodes: number | null;
  count: number;
  max_influence: number;
  effect: number;
}

export interface CemResponse {
  network_id: number;
  cells: CemCell[];
}

export interface ChainFeaturesWire {
  n: number;
  e: number;
  density: number;
  avg_clustering: number;
  avg_path_len: number;
}

export interface ChainRecord {
  chain_id: number;
  network_id: number;
  nodes: string[];
  edges: [string, string][];
  sources: string[];
  exposure: number;
  guarantee_amount: number;
  features: ChainFeaturesWire;
  pattern: string;
  quadrant: string;
  cluster: number;
}

export interface HistogramWire {
  bin_edges: number[];
  counts: number[];
}

export interface CategoryCountsWire {
  categories: string[];
  counts: number[];
}

export interface NetworkStats {
  network_id: number;
  exposure: HistogramWire;
  registered_capital: HistogramWire;
  business_type: CategoryCountsWire;
  size_class: CategoryCountsWire;
}

export const PATTERNS = ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"] as const;
export const QUADRANTS = ["QI", "QII", "QIII", "QIV"] as const;
