/** Tiny DOM/SVG helpers; no framework, views render imperatively. */

export const SVG_NS = "http://www.w3.org/2000/svg";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

export function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
  return node;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Spiky virus glyph marking an outbreak source. */
export function virusGlyph(cx: number, cy: number, r: number): SVGGElement {
  const group = svgEl("g", { class: "virus" });
  for (let i = 0; i < 8; i++) {
    const angle = (i * Math.PI) / 4;
    group.appendChild(
      svgEl("line", {
        x1: cx + r * 0.7 * Math.cos(angle),
        y1: cy + r * 0.7 * Math.sin(angle),
        x2: cx + r * 1.5 * Math.cos(angle),
        y2: cy + r * 1.5 * Math.sin(angle),
      }),
    );
  }
  group.appendChild(svgEl("circle", { cx, cy, r: r * 0.9 }));
  return group;
}
