// Pareto scatter: every archive point, recommended marked. Hover detail comes
// from native <title> tooltips; values are echoed verbatim from the API.

import type { ArchiveEntryPayload, ObjectivesPayload } from "./types";

const WIDTH = 320;
const HEIGHT = 240;
const PAD = 34;

export function paretoChart(
  archive: ArchiveEntryPayload[],
  recommended: ObjectivesPayload,
): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" ` +
      `class="pareto-chart" font-family="sans-serif">`,
  );
  parts.push(
    `<text x="${WIDTH / 2}" y="${HEIGHT - 4}" font-size="10" text-anchor="middle">heat</text>`,
  );
  parts.push(
    `<text x="10" y="${HEIGHT / 2}" font-size="10" text-anchor="middle" ` +
      `transform="rotate(-90 10 ${HEIGHT / 2})">wire mm</text>`,
  );
  parts.push(
    `<rect x="${PAD}" y="${PAD / 2}" width="${WIDTH - PAD - 8}" height="${HEIGHT - PAD - PAD / 2}" ` +
      `fill="none" stroke="#ccc"/>`,
  );

  const heats = archive.map((e) => e.heat);
  const wires = archive.map((e) => e.wireMm);
  const scaleX = makeScale(Math.min(...heats), Math.max(...heats), PAD, WIDTH - 8);
  const scaleY = makeScale(Math.min(...wires), Math.max(...wires), HEIGHT - PAD, PAD / 2);

  for (const entry of archive) {
    const isRecommended = entry.heat === recommended.heat && entry.wireMm === recommended.wireMm;
    const cx = scaleX(entry.heat);
    const cy = scaleY(entry.wireMm);
    parts.push(
      `<circle class="archive-point${isRecommended ? " recommended" : ""}" ` +
        `cx="${cx}" cy="${cy}" r="${isRecommended ? 6 : 4}" ` +
        `fill="${isRecommended ? "#d4542c" : "#3a6ea5"}" ` +
        `data-heat="${entry.heat}" data-wire-mm="${entry.wireMm}">` +
        `<title>heat=${entry.heat} wire=${entry.wireMm} mm</title></circle>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

function makeScale(lo: number, hi: number, outLo: number, outHi: number) {
  const span = hi - lo;
  if (span === 0) {
    const mid = (outLo + outHi) / 2;
    return (_: number) => mid;
  }
  return (value: number) => outLo + ((value - lo) / span) * (outHi - outLo);
}
