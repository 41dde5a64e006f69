/**
 * Contagion Effect Matrix: the eight patterns in their fixed four-quadrant
 * grid, instance counts in the top-left corner, quadrant risk colors.
 * Clicking a cell selects that pattern for chain-level analysis.
 */

import type { ConsoleController } from "../controller.js";
import { clear, el } from "../dom.js";

export class CemView {
  private container: HTMLElement;

  constructor(
    root: HTMLElement,
    private controller: ConsoleController,
  ) {
    root.appendChild(el("h2", {}, "Contagion Effect Matrix"));
    this.container = el("div", { class: "cem-grid" });
    root.appendChild(this.container);
  }

  render(): void {
    clear(this.container);
    const cem = this.controller.data.cem;
    if (!cem) {
      this.container.appendChild(el("div", { class: "empty" }, "Select a network"));
      return;
    }
    const state = this.controller.store.current();
    const cells = [...cem.cells].sort((a, b) => a.row - b.row || a.col - b.col);
    for (const cell of cells) {
      const isSelected = state.selected_pattern_cell === cell.pattern;
      const box = el("div", {
        class: "cem-cell" + (cell.count === 0 ? " muted" : "") + (isSelected ? " selected" : ""),
        style: `grid-row:${cell.row + 1};grid-column:${cell.col + 1};--cell-color:${cell.color}`,
        "data-pattern": cell.pattern,
      });
      box.appendChild(el("span", { class: "cem-count" }, String(cell.count)));
      box.appendChild(el("span", { class: "cem-pattern" }, cell.pattern));
      box.appendChild(el("span", { class: "cem-range" }, cell.range_of_influence));
      box.title = `${cell.pattern}: ${cell.count} instance(s), worst influence ${cell.max_influence}, effect ${cell.effect}`;
      box.addEventListener("click", () => {
        void this.controller.selectPatternCell(isSelected ? null : cell.pattern);
      });
      this.container.appendChild(box);
    }
  }
}
