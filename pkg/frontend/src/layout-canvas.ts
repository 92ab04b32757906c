// Layout panel: renders the recommended placement as inline SVG. Rectangles
// come straight from the server's placement coordinates so click hit-testing
// is native DOM; the server-rendered SVG stays the exportable artifact.

import type { CabinetDocument, ResultPayload } from "./types";

const MARGIN = 16;
const HEADER = 26;
const HOT_FILL = "#e06c5b";
const COLD_FILL = "#8fb4d9";
const SELECTED_STROKE = "#111";

export interface CanvasOptions {
  selectedIndex?: number | null;
}

/** Error banner for failed jobs; the canvas is not drawn. */
export function errorBanner(message: string): string {
  return `<div class="banner error" role="alert">${escapeHtml(message)}</div>`;
}

/**
 * SVG for a finished job. Every component rect carries data-index so the
 * container can map clicks back to component selection.
 */
export function layoutCanvas(
  result: ResultPayload,
  document: CabinetDocument,
  options: CanvasOptions = {},
): string {
  const placement = result.recommended.placement;
  const objectives = result.recommended.objectives;
  const hotByIndex = new Map(document.components.map((c) => [c.index, c.isHot]));
  const idByIndex = new Map(document.components.map((c) => [c.index, c.id]));
  const width = placement.usableWidthMm + 2 * MARGIN;
  const height = placement.totalHeightMm + 2 * MARGIN + HEADER;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
      `class="layout-canvas" font-family="sans-serif">`,
  );
  // Raw numbers on purpose: what the API reported is what the user sees.
  parts.push(
    `<text x="${MARGIN}" y="${MARGIN}" font-size="13" class="objectives" ` +
      `data-heat="${objectives.heat}" data-wire-mm="${objectives.wireMm}">` +
      `heat=${objectives.heat} wire=${objectives.wireMm} mm</text>`,
  );
  parts.push(
    `<rect x="${MARGIN}" y="${MARGIN + HEADER}" width="${placement.usableWidthMm}" ` +
      `height="${placement.totalHeightMm}" fill="none" stroke="#555" stroke-width="1.5"/>`,
  );

  const centers = new Map<number, [number, number]>();
  for (const placed of placement.components) {
    const x = MARGIN + placed.xMm;
    const y = MARGIN + HEADER + placed.yMm;
    centers.set(placed.index, [x + placed.widthMm / 2, y + placed.heightMm / 2]);
    const hot = hotByIndex.get(placed.index) ?? false;
    const selected = options.selectedIndex === placed.index;
    parts.push(
      `<rect class="component${hot ? " hot" : ""}${selected ? " selected" : ""}" ` +
        `data-index="${placed.index}" x="${x}" y="${y}" ` +
        `width="${placed.widthMm}" height="${placed.heightMm}" ` +
        `fill="${hot ? HOT_FILL : COLD_FILL}" ` +
        `stroke="${selected ? SELECTED_STROKE : "#333"}" ` +
        `stroke-width="${selected ? 3 : 1}"/>`,
    );
    parts.push(
      `<text x="${x + 4}" y="${y + 13}" font-size="10" pointer-events="none">` +
        `#${placed.index} ${escapeHtml(idByIndex.get(placed.index) ?? "")}</text>`,
    );
  }

  for (const edge of undirectedEdges(document)) {
    const a = centers.get(edge[0]);
    const b = centers.get(edge[1]);
    if (!a || !b) {
      continue;
    }
    parts.push(
      `<polyline class="wire" points="${a[0]},${a[1]} ${b[0]},${a[1]} ${b[0]},${b[1]}" ` +
        `fill="none" stroke="#222" stroke-width="0.8" opacity="0.65"/>`,
    );
  }

  parts.push("</svg>");
  return parts.join("\n");
}

/** Deduplicated undirected wire list from the document's connectsTo columns. */
export function undirectedEdges(document: CabinetDocument): [number, number][] {
  const seen = new Set<string>();
  const edges: [number, number][] = [];
  for (const comp of document.components) {
    for (const target of comp.connectsTo) {
      const a = Math.min(comp.index, target);
      const b = Math.max(comp.index, target);
      const key = `${a}-${b}`;
      if (!seen.has(key)) {
        seen.add(key);
        edges.push([a, b]);
      }
    }
  }
  return edges;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
