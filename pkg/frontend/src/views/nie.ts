/**
 * Node Instance Explorer: corporation-level drill-down. A distributions
 * tab shows the four financial histograms (exposure, registered capital,
 * business type, business size) as cross-filters: brushing one narrows
 * the node set feeding the other three. An overview tab lays exposure
 * bubbles sized by registered capital; clicking a bubble selects that
 * corporation's contagion chain.
 */

import type { ConsoleController } from "../controller.js";
import {
  bubbleData,
  categoryCountsOf,
  filterNodes,
  findChainForNode,
  histogramOf,
} from "../crossfilter.js";
import { clear, el, svgEl } from "../dom.js";
import type { Filters } from "../state.js";

const HIST_WIDTH = 170;
const HIST_HEIGHT = 80;

export class NieView {
  private container: HTMLElement;
  private tab: "distributions" | "overview" = "distributions";

  constructor(
    root: HTMLElement,
    private controller: ConsoleController,
  ) {
    const heading = el("div", { class: "view-heading" });
    heading.appendChild(el("h2", {}, "Node Instance Explorer"));
    const tabs = el("div", { class: "tabs" });
    const distributions = el("button", { class: "tool active", id: "tab-dist" }, "Distributions");
    const overview = el("button", { class: "tool", id: "tab-overview" }, "Overview");
    distributions.addEventListener("click", () => this.switchTab("distributions"));
    overview.addEventListener("click", () => this.switchTab("overview"));
    tabs.appendChild(distributions);
    tabs.appendChild(overview);
    heading.appendChild(tabs);
    root.appendChild(heading);
    this.container = el("div", { class: "nie-body" });
    root.appendChild(this.container);
  }

  private switchTab(tab: "distributions" | "overview"): void {
    this.tab = tab;
    document.getElementById("tab-dist")?.classList.toggle("active", tab === "distributions");
    document.getElementById("tab-overview")?.classList.toggle("active", tab === "overview");
    this.render();
  }

  render(): void {
    clear(this.container);
    const detail = this.controller.data.detail;
    if (!detail) {
      this.container.appendChild(el("div", { class: "empty" }, "Select a network"));
      return;
    }
    if (this.tab === "distributions") this.renderDistributions();
    else this.renderOverview();
  }

  private renderDistributions(): void {
    const detail = this.controller.data.detail!;
    const filters = this.controller.store.current().filters;
    const surviving = filterNodes(detail.nodes, filters);
    if (surviving.length === 0) {
      this.container.appendChild(
        el("div", { class: "empty" }, "No corporations match the current filters"),
      );
    }
    const grid = el("div", { class: "nie-grid" });
    grid.appendChild(
      this.numericHistogram("exposure", "Exposure", surviving.map((n) => n.exposure), filters),
    );
    grid.appendChild(
      this.numericHistogram(
        "registered_capital",
        "Registered capital",
        surviving.map((n) => n.registered_capital),
        filters,
      ),
    );
    grid.appendChild(
      this.categoryBars("business_type", "Business type", surviving.map((n) => n.business_type), filters),
    );
    grid.appendChild(
      this.categoryBars("size_class", "Business size", surviving.map((n) => n.size_class), filters),
    );
    const note = el(
      "div",
      { class: "nie-note" },
      `${surviving.length}/${detail.nodes.length} corporations pass the filters`,
    );
    this.container.appendChild(grid);
    this.container.appendChild(note);
    const resetButton = el("button", { class: "tool" }, "Clear filters");
    resetButton.addEventListener("click", () => this.controller.setFilters({}));
    this.container.appendChild(resetButton);
  }

  /** Histogram with a drag-brush that writes a numeric range filter. */
  private numericHistogram(
    key: "exposure" | "registered_capital",
    label: string,
    values: number[],
    filters: Filters,
  ): HTMLElement {
    const block = el("div", { class: "hist-block" });
    block.appendChild(el("h3", {}, label));
    const histogram = histogramOf(values);
    const svg = svgEl("svg", { width: HIST_WIDTH, height: HIST_HEIGHT });
    const maxCount = Math.max(1, ...histogram.counts);
    const barWidth = HIST_WIDTH / histogram.counts.length;
    histogram.counts.forEach((count, i) => {
      const height = (count / maxCount) * (HIST_HEIGHT - 14);
      svg.appendChild(
        svgEl("rect", {
          x: i * barWidth + 1,
          y: HIST_HEIGHT - height,
          width: barWidth - 2,
          height,
          class: "hist-bar",
        }),
      );
    });
    const top = histogram.bin_edges[histogram.bin_edges.length - 1];
    let startX: number | null = null;
    svg.addEventListener("mousedown", (event) => {
      startX = event.offsetX;
    });
    svg.addEventListener("mouseup", (event) => {
      if (startX === null) return;
      const x0 = Math.min(startX, event.offsetX);
      const x1 = Math.max(startX, event.offsetX);
      startX = null;
      if (x1 - x0 < 4 || top <= 0) return;
      const lo = Math.floor((x0 / HIST_WIDTH) * top);
      const hi = Math.ceil((x1 / HIST_WIDTH) * top);
      this.controller.setFilters({ ...filters, [key]: [lo, hi] });
    });
    block.appendChild(svg);
    if (filters[key]) {
      block.appendChild(
        el("div", { class: "filter-tag" }, `${filters[key]![0]} – ${filters[key]![1]}`),
      );
    }
    return block;
  }

  /** Category bars that toggle in/out of the categorical filter on click. */
  private categoryBars(
    key: "business_type" | "size_class",
    label: string,
    values: string[],
    filters: Filters,
  ): HTMLElement {
    const block = el("div", { class: "hist-block" });
    block.appendChild(el("h3", {}, label));
    const counts = categoryCountsOf(values);
    const maxCount = Math.max(1, ...counts.counts);
    const list = el("div", { class: "cat-bars" });
    counts.categories.forEach((category, i) => {
      const active = filters[key]?.includes(category) ?? false;
      const row = el("div", { class: "cat-row" + (active ? " active" : "") });
      const bar = el("div", { class: "cat-bar" });
      bar.style.width = `${(counts.counts[i] / maxCount) * 100}%`;
      row.appendChild(el("span", { class: "cat-label" }, `${category} (${counts.counts[i]})`));
      row.appendChild(bar);
      row.addEventListener("click", () => {
        const current = new Set(filters[key] ?? []);
        if (current.has(category)) current.delete(category);
        else current.add(category);
        const next = { ...filters };
        if (current.size) next[key] = [...current].sort();
        else delete next[key];
        this.controller.setFilters(next);
      });
      list.appendChild(row);
    });
    block.appendChild(list);
    return block;
  }

  /** Overview tab: repulsed bubbles along the exposure axis. */
  private renderOverview(): void {
    const detail = this.controller.data.detail!;
    const width = 380;
    const height = 200;
    const svg = svgEl("svg", { width, height, viewBox: `0 0 ${width} ${height}` });
    const bubbles = bubbleData(detail.nodes);
    const maxExposure = Math.max(1, ...bubbles.map((b) => b.exposure));
    const maxCapital = Math.max(1, ...bubbles.map((b) => b.registered_capital));
    // lay bubbles along x by exposure, stagger y deterministically to reduce overlap
    bubbles.forEach((bubble, i) => {
      const radius = 3 + 9 * Math.sqrt(bubble.registered_capital / maxCapital);
      const x = 20 + (bubble.exposure / maxExposure) * (width - 40);
      const y = 24 + ((i * 37) % (height - 48));
      const circle = svgEl("circle", { cx: x, cy: y, r: radius, class: "bubble" });
      circle.appendChild(svgEl("title")).textContent =
        `${bubble.id}: exposure ${bubble.exposure}, capital ${bubble.registered_capital}`;
      circle.addEventListener("click", () => void this.selectChainForNode(bubble.id));
      svg.appendChild(circle);
    });
    svg.appendChild(
      svgEl("line", { x1: 10, y1: height - 12, x2: width - 10, y2: height - 12, class: "axis" }),
    );
    const label = svgEl("text", { x: width - 12, y: height - 2, class: "axis-label", "text-anchor": "end" });
    label.textContent = "exposure";
    svg.appendChild(label);
    this.container.appendChild(svg);
  }

  private async selectChainForNode(nodeId: string): Promise<void> {
    if (this.controller.store.current().selected_network === null) return;
    // search within the already-loaded cell first, else the whole network
    let chain = findChainForNode(this.controller.data.chains, nodeId);
    if (!chain) chain = findChainForNode(await this.controller.allNetworkChains(), nodeId);
    if (chain) await this.controller.selectChain(chain.chain_id);
  }
}
