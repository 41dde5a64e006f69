import type {
  CemResponse,
  ChainRecord,
  NetworkDetail,
  NetworkStats,
  NetworkSummary,
} from "./types.js";

export interface ChainFilter {
  pattern?: string;
  quadrant?: string;
}

/** Read-only client over the analysis service. */
export interface ApiClient {
  listNetworks(sort?: "size" | "id"): Promise<NetworkSummary[]>;
  networkDetail(id: number): Promise<NetworkDetail>;
  networkCem(id: number): Promise<CemResponse>;
  networkChains(id: number, filter?: ChainFilter): Promise<ChainRecord[]>;
  chainDetail(id: number): Promise<ChainRecord>;
  networkStats(id: number): Promise<NetworkStats>;
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly path: string, message: string) {
    super(`${path}: ${message} (${status})`);
  }
}

/**
 * fetch()-backed client. Watches the X-Config-Hash header every response
 * carries and reports when the served bundle changed under us, so views can
 * drop stale caches.
 */
export class HttpApi implements ApiClient {
  private configHash: string | null = null;

  constructor(
    readonly baseUrl: string = "",
    readonly onStaleBundle: (oldHash: string, newHash: string) => void = () => {},
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path, { headers: { Accept: "application/json" } });
    const hash = response.headers.get("X-Config-Hash");
    if (hash) {
      if (this.configHash && this.configHash !== hash) this.onStaleBundle(this.configHash, hash);
      this.configHash = hash;
    }
    if (!response.ok) {
      let message = response.statusText;
      try {
        const body = (await response.json()) as { error?: string };
        if (body.error) message = body.error;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, path, message);
    }
    return (await response.json()) as T;
  }

  listNetworks(sort: "size" | "id" = "size"): Promise<NetworkSummary[]> {
    return this.get(`/api/networks?sort=${sort}`);
  }

  networkDetail(id: number): Promise<NetworkDetail> {
    return this.get(`/api/networks/${id}`);
  }

  networkCem(id: number): Promise<CemResponse> {
    return this.get(`/api/networks/${id}/cem`);
  }

  networkChains(id: number, filter: ChainFilter = {}): Promise<ChainRecord[]> {
    const params = new URLSearchParams();
    if (filter.pattern) params.set("pattern", filter.pattern);
    if (filter.quadrant) params.set("quadrant", filter.quadrant);
    const query = params.toString();
    return this.get(`/api/networks/${id}/chains${query ? "?" + query : ""}`);
  }

  chainDetail(id: number): Promise<ChainRecord> {
    return this.get(`/api/chains/${id}`);
  }

  networkStats(id: number): Promise<NetworkStats> {
    return this.get(`/api/networks/${id}/stats`);
  }
}
