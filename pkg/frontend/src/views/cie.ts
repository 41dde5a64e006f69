/**
 * Chain Instance Explorer: chain instances on the financial coordinate
 * plane (x total guarantee amount, y exposure). Coincident chains group
 * into flowers with one clickable petal per chain and the count in the
 * center; brushing zooms into dense regions and regroups flowers within
 * the window.
 */

import type { ConsoleController } from "../controller.js";
import { clear, el, svgEl } from "../dom.js";
import { chainsInWindow, groupFlowers, petalPaths, ZoomWindow } from "../flowers.js";
import type { ChainRecord } from "../types.js";

const WIDTH = 360;
const HEIGHT = 260;
const MARGIN = 36;

export class CieView {
  private container: HTMLElement;
  private zoom: ZoomWindow | null = null;

  constructor(
    root: HTMLElement,
    private controller: ConsoleController,
  ) {
    const heading = el("div", { class: "view-heading" });
    heading.appendChild(el("h2", {}, "Chain Instance Explorer"));
    const reset = el("button", { class: "tool" }, "Reset zoom");
    reset.addEventListener("click", () => {
      this.zoom = null;
      this.render();
    });
    heading.appendChild(reset);
    root.appendChild(heading);
    this.container = el("div", { class: "cie-plot" });
    root.appendChild(this.container);
  }

  render(): void {
    clear(this.container);
    const all = this.controller.visibleChains();
    if (all.length === 0) {
      this.container.appendChild(
        el("div", { class: "empty" }, "Select a matrix cell to see chain instances"),
      );
      this.zoom = null;
      return;
    }
    const chains = this.zoom ? chainsInWindow(all, this.zoom) : all;
    const xMax = Math.max(1, ...chains.map((c) => c.guarantee_amount));
    const yMax = Math.max(1, ...chains.map((c) => c.exposure));
    const xMin = this.zoom ? this.zoom.x0 : 0;
    const yMin = this.zoom ? this.zoom.y0 : 0;
    const xSpan = Math.max(1, (this.zoom ? this.zoom.x1 : xMax) - xMin);
    const ySpan = Math.max(1, (this.zoom ? this.zoom.y1 : yMax) - yMin);

    const toX = (v: number) => MARGIN + ((v - xMin) / xSpan) * (WIDTH - 2 * MARGIN);
    const toY = (v: number) => HEIGHT - MARGIN - ((v - yMin) / ySpan) * (HEIGHT - 2 * MARGIN);

    const svg = svgEl("svg", { width: WIDTH, height: HEIGHT, viewBox: `0 0 ${WIDTH} ${HEIGHT}` });
    svg.appendChild(
      svgEl("line", {
        x1: MARGIN, y1: HEIGHT - MARGIN, x2: WIDTH - MARGIN, y2: HEIGHT - MARGIN, class: "axis",
      }),
    );
    svg.appendChild(
      svgEl("line", { x1: MARGIN, y1: MARGIN, x2: MARGIN, y2: HEIGHT - MARGIN, class: "axis" }),
    );
    svg.appendChild(
      svgEl("text", { x: WIDTH - MARGIN, y: HEIGHT - 8, class: "axis-label", "text-anchor": "end" }),
    ).textContent = "total guarantee amount";
    const yLabel = svgEl("text", {
      x: 10, y: MARGIN, class: "axis-label", transform: `rotate(-90 10 ${MARGIN})`, "text-anchor": "end",
    });
    yLabel.textContent = "exposure";
    svg.appendChild(yLabel);

    const selected = this.controller.store.current().selected_chain;
    for (const flower of groupFlowers(chains)) {
      const cx = toX(flower.x);
      const cy = toY(flower.y);
      const group = svgEl("g", { class: "flower" });
      if (flower.count === 1) {
        const chain = flower.chains[0];
        const dot = svgEl("circle", {
          cx, cy, r: 6,
          class: "petal" + (selected === chain.chain_id ? " selected" : ""),
          "data-chain-id": chain.chain_id,
        });
        dot.addEventListener("click", () => void this.controller.selectChain(chain.chain_id));
        dot.appendChild(svgEl("title")).textContent = `chain ${chain.chain_id} (${chain.pattern})`;
        group.appendChild(dot);
      } else {
        for (const petal of petalPaths(flower, cx, cy, 14)) {
          const path = svgEl("path", {
            d: petal.path,
            class: "petal" + (selected === petal.chainId ? " selected" : ""),
            "data-chain-id": petal.chainId,
          });
          path.addEventListener("click", () => void this.controller.selectChain(petal.chainId));
          path.appendChild(svgEl("title")).textContent = `chain ${petal.chainId}`;
          group.appendChild(path);
        }
        const label = svgEl("text", { x: cx, y: cy + 3, class: "flower-count", "text-anchor": "middle" });
        label.textContent = String(flower.count);
        group.appendChild(label);
      }
      svg.appendChild(group);
    }

    this.attachBrush(svg, (x0, y0, x1, y1) => {
      const invertX = (px: number) => xMin + ((px - MARGIN) / (WIDTH - 2 * MARGIN)) * xSpan;
      const invertY = (py: number) => yMin + ((HEIGHT - MARGIN - py) / (HEIGHT - 2 * MARGIN)) * ySpan;
      this.zoom = {
        x0: Math.max(0, invertX(Math.min(x0, x1))),
        x1: invertX(Math.max(x0, x1)),
        y0: Math.max(0, invertY(Math.max(y0, y1))),
        y1: invertY(Math.min(y0, y1)),
      };
      this.render();
    });
    this.container.appendChild(svg);
  }

  private attachBrush(
    svg: SVGSVGElement,
    onBrush: (x0: number, y0: number, x1: number, y1: number) => void,
  ): void {
    let start: { x: number; y: number } | null = null;
    let rect: SVGRectElement | null = null;
    const local = (event: MouseEvent) => {
      const bounds = svg.getBoundingClientRect();
      return { x: event.clientX - bounds.left, y: event.clientY - bounds.top };
    };
    svg.addEventListener("mousedown", (event) => {
      if ((event.target as Element).classList.contains("petal")) return;
      start = local(event);
      rect = svgEl("rect", { class: "brush", x: start.x, y: start.y, width: 0, height: 0 });
      svg.appendChild(rect);
    });
    svg.addEventListener("mousemove", (event) => {
      if (!start || !rect) return;
      const point = local(event);
      rect.setAttribute("x", String(Math.min(start.x, point.x)));
      rect.setAttribute("y", String(Math.min(start.y, point.y)));
      rect.setAttribute("width", String(Math.abs(point.x - start.x)));
      rect.setAttribute("height", String(Math.abs(point.y - start.y)));
    });
    svg.addEventListener("mouseup", (event) => {
      if (!start || !rect) return;
      const point = local(event);
      rect.remove();
      const moved = Math.abs(point.x - start.x) > 6 && Math.abs(point.y - start.y) > 6;
      if (moved) onBrush(start.x, start.y, point.x, point.y);
      start = null;
      rect = null;
    });
  }
}

export type { ChainRecord };
