/**
 * Guarantee Network Explorer: tessellated grid of the networks in
 * complexity order, with the interaction toolbar (expanded view, risk
 * badges, box selection, edge widths, color palette) and chain highlight
 * overlay with virus glyphs on outbreak sources.
 */

import { badgeArcPaths, isRingOnly } from "../badge.js";
import type { ConsoleController } from "../controller.js";
import { edgeKey } from "../controller.js";
import { clear, el, svgEl, virusGlyph } from "../dom.js";
import { forceLayout, tessellationOrder } from "../layout.js";
import type { ColorMode } from "../state.js";
import type { NetworkDetail, NetworkSummary } from "../types.js";

const CELL = 120;
const COMPACT_LIMIT = 60;

const TYPE_COLORS = ["#4e79a7", "#f28e2b", "#76b7b2", "#e15759", "#59a14f", "#b07aa1", "#9c755f"];
const SIZE_COLORS: Record<string, string> = {
  micro: "#c7e9c0",
  small: "#74c476",
  medium: "#31a354",
  large: "#006d2c",
};

function categoryColor(mode: ColorMode, value: string, palette: Map<string, string>): string {
  if (mode === "size_class") return SIZE_COLORS[value] ?? "#888";
  let color = palette.get(value);
  if (!color) {
    color = TYPE_COLORS[palette.size % TYPE_COLORS.length];
    palette.set(value, color);
  }
  return color;
}

export class GneView {
  private grid: HTMLElement;
  private typePalette = new Map<string, string>();
  private boxSelecting = false;

  constructor(
    private root: HTMLElement,
    private controller: ConsoleController,
  ) {
    const toolbar = el("div", { class: "toolbar" });
    toolbar.appendChild(this.toggleButton("expanded", "Expanded view", "expanded_view"));
    toolbar.appendChild(this.toggleButton("badges", "Risk badges", "badges_on"));
    const box = el("button", { class: "tool", title: "Box selection" }, "Box select");
    box.addEventListener("click", () => {
      this.boxSelecting = !this.boxSelecting;
      box.classList.toggle("active", this.boxSelecting);
    });
    toolbar.appendChild(box);
    toolbar.appendChild(this.toggleButton("widths", "Edge width by amount", "edge_width_on"));
    const palette = el("button", { class: "tool", title: "Color palette" }, "Color: type");
    palette.addEventListener("click", () => {
      const mode = this.controller.store.current().toggles.color_mode;
      const next = mode === "business_type" ? "size_class" : "business_type";
      this.controller.store.setToggle("color_mode", next);
      palette.textContent = next === "business_type" ? "Color: type" : "Color: size";
      this.render();
    });
    toolbar.appendChild(palette);
    root.appendChild(toolbar);
    this.grid = el("div", { class: "gne-grid" });
    root.appendChild(this.grid);
    this.grid.addEventListener("mousedown", (event) => this.beginBoxSelect(event));
  }

  private toggleButton(
    id: string,
    label: string,
    key: "badges_on" | "edge_width_on" | "expanded_view",
  ): HTMLButtonElement {
    const button = el("button", { class: "tool", id: `tool-${id}` }, label);
    button.addEventListener("click", () => {
      const current = this.controller.store.current().toggles[key];
      this.controller.store.setToggle(key, !current);
      button.classList.toggle("active", !current);
      this.render();
    });
    return button;
  }

  private beginBoxSelect(event: MouseEvent): void {
    if (!this.boxSelecting) return;
    event.preventDefault();
    const origin = { x: event.clientX, y: event.clientY };
    const marquee = el("div", { class: "marquee" });
    document.body.appendChild(marquee);
    const update = (e: MouseEvent) => {
      const x = Math.min(origin.x, e.clientX);
      const y = Math.min(origin.y, e.clientY);
      marquee.style.left = `${x}px`;
      marquee.style.top = `${y}px`;
      marquee.style.width = `${Math.abs(e.clientX - origin.x)}px`;
      marquee.style.height = `${Math.abs(e.clientY - origin.y)}px`;
    };
    const finish = (e: MouseEvent) => {
      document.removeEventListener("mousemove", update);
      document.removeEventListener("mouseup", finish);
      marquee.remove();
      const rect = {
        left: Math.min(origin.x, e.clientX),
        right: Math.max(origin.x, e.clientX),
        top: Math.min(origin.y, e.clientY),
        bottom: Math.max(origin.y, e.clientY),
      };
      for (const cell of this.grid.querySelectorAll<HTMLElement>(".gne-cell")) {
        const bounds = cell.getBoundingClientRect();
        const overlaps =
          bounds.left < rect.right &&
          bounds.right > rect.left &&
          bounds.top < rect.bottom &&
          bounds.bottom > rect.top;
        if (overlaps) {
          void this.controller.selectNetwork(Number(cell.dataset.networkId));
          break;
        }
      }
    };
    document.addEventListener("mousemove", update);
    document.addEventListener("mouseup", finish);
  }

  render(): void {
    clear(this.grid);
    const state = this.controller.store.current();
    const ordered = tessellationOrder(this.controller.data.networks);
    const visible = state.toggles.expanded_view ? ordered : ordered.slice(0, COMPACT_LIMIT);
    for (const summary of visible) {
      this.grid.appendChild(this.networkCell(summary));
    }
    if (!state.toggles.expanded_view && ordered.length > visible.length) {
      const note = el(
        "div",
        { class: "gne-more" },
        `+${ordered.length - visible.length} more networks (expanded view shows all)`,
      );
      this.grid.appendChild(note);
    }
  }

  private networkCell(summary: NetworkSummary): HTMLElement {
    const state = this.controller.store.current();
    const cell = el("div", {
      class:
        "gne-cell" + (state.selected_network === summary.network_id ? " selected" : ""),
      "data-network-id": String(summary.network_id),
    });
    cell.addEventListener("click", () => void this.controller.selectNetwork(summary.network_id));
    const svg = svgEl("svg", { width: CELL, height: CELL, viewBox: `0 0 ${CELL} ${CELL}` });

    const detail =
      this.controller.data.detail?.network_id === summary.network_id
        ? this.controller.data.detail
        : null;
    if (detail) {
      this.drawNetwork(svg, detail);
    } else {
      this.drawPlaceholder(svg, summary);
    }
    if (state.toggles.badges_on) this.drawBadge(svg, summary);
    cell.appendChild(svg);
    cell.appendChild(
      el("div", { class: "gne-label" }, `#${summary.network_id} (${summary.node_count})`),
    );
    return cell;
  }

  /** Unselected networks draw a deterministic sketch from summary data only. */
  private drawPlaceholder(svg: SVGSVGElement, summary: NetworkSummary): void {
    const ids = Array.from({ length: Math.min(summary.node_count, 40) }, (_, i) =>
      `${summary.network_id}:${i}`,
    );
    const positions = forceLayout(ids, [], CELL, CELL, 30);
    for (const id of ids) {
      const point = positions.get(id)!;
      svg.appendChild(svgEl("circle", { cx: point.x, cy: point.y, r: 2.2, class: "node-dot" }));
    }
  }

  private drawNetwork(svg: SVGSVGElement, detail: NetworkDetail): void {
    const state = this.controller.store.current();
    const highlight = this.controller.highlight();
    const surviving = this.controller.survivingNodeIds();
    const positions = forceLayout(
      detail.nodes.map((node) => node.id),
      detail.edges.map((edge) => [edge.guarantor_id, edge.borrower_id]),
      CELL,
      CELL,
    );
    const maxAmount = Math.max(1, ...detail.edges.map((edge) => edge.amount));
    for (const edge of detail.edges) {
      const from = positions.get(edge.guarantor_id)!;
      const to = positions.get(edge.borrower_id)!;
      // contagion runs borrower -> guarantor
      const contagionKey = edgeKey(edge.borrower_id, edge.guarantor_id);
      const inChain = highlight?.edgeKeys.has(contagionKey) ?? false;
      const width = state.toggles.edge_width_on ? 0.5 + 2.5 * (edge.amount / maxAmount) : 1;
      svg.appendChild(
        svgEl("line", {
          x1: from.x,
          y1: from.y,
          x2: to.x,
          y2: to.y,
          class: inChain ? "edge chain" : "edge",
          "stroke-width": inChain ? width + 0.8 : width,
        }),
      );
    }
    for (const node of detail.nodes) {
      const point = positions.get(node.id)!;
      const inChain = highlight?.nodeIds.has(node.id) ?? false;
      const filteredOut = surviving !== null && !surviving.has(node.id);
      const circle = svgEl("circle", {
        cx: point.x,
        cy: point.y,
        r: inChain ? 4 : 3,
        class: "node" + (inChain ? " chain" : "") + (filteredOut ? " filtered-out" : ""),
        fill: inChain
          ? "#c62828"
          : categoryColor(
              state.toggles.color_mode,
              state.toggles.color_mode === "business_type" ? node.business_type : node.size_class,
              this.typePalette,
            ),
      });
      circle.appendChild(svgEl("title")).textContent = `${node.id} exposure=${node.exposure}`;
      svg.appendChild(circle);
      if (highlight?.virusNodeIds.has(node.id)) {
        svg.appendChild(virusGlyph(point.x, point.y, 5));
      }
    }
  }

  private drawBadge(svg: SVGSVGElement, summary: NetworkSummary): void {
    const radius = 8 + 16 * summary.radius_rel; // display floor keeps tiny badges visible
    const cx = CELL - radius - 4;
    const cy = radius + 4;
    if (isRingOnly(summary.chain_count)) {
      svg.appendChild(svgEl("circle", { cx, cy, r: radius, class: "badge-ring" }));
      return;
    }
    for (const slice of badgeArcPaths(summary.pq, cx, cy, radius)) {
      svg.appendChild(svgEl("path", { d: slice.path, fill: slice.color, class: "badge-slice" }));
    }
  }
}
