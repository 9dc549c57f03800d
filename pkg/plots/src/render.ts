/**
 * Figure rendering from sweep CSV files.
 *
 * Curves plot the measure (bits) against the basis angle t, one polyline per
 * input CSV. Surfaces plot a heatmap over the (t, a) grid of a single CSV.
 * Rendering never recomputes physics: everything comes from the CSV contract.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { basename } from "node:path";

import { CsvFormatError, parseSweepCsv, type CurveTable, type SurfaceTable } from "./csv.js";
import { colormap, fmt, linearScale, niceTicks } from "./svg.js";

export interface FigureSpec {
  inputs: string[];
  kind: "curve" | "surface";
  output: string;
  labels?: {
    title?: string;
    xLabel?: string;
    yLabel?: string;
  };
}

export interface SeriesStats {
  source: string;
  points: number;
  min: number;
  max: number;
}

export interface RenderResult {
  svg: string;
  series: SeriesStats[];
}

const W = 720;
const H = 460;
const MARGIN = { top: 48, right: 28, bottom: 56, left: 68 };
const PLOT_W = W - MARGIN.left - MARGIN.right;
const PLOT_H = H - MARGIN.top - MARGIN.bottom;
const PALETTE = ["#2563eb", "#dc2626", "#059669", "#9333ea", "#d97706", "#0891b2"];

export function render(spec: FigureSpec): RenderResult {
  if (spec.inputs.length === 0) throw new CsvFormatError("no input CSVs given");
  const tables = spec.inputs.map((p) => parseSweepCsv(readFileSync(p, "utf8"), p));
  let result: RenderResult;
  if (spec.kind === "curve") {
    const curves = tables.map((tb) => {
      if (tb.kind !== "curve") {
        throw new CsvFormatError(`${tb.source}: populated "a" column in a curve figure`);
      }
      return tb;
    });
    result = renderCurve(curves, spec.labels ?? {});
  } else {
    if (tables.length !== 1) {
      throw new CsvFormatError("surface figures take exactly one input CSV");
    }
    const tb = tables[0];
    if (tb.kind !== "surface") {
      throw new CsvFormatError(`${tb.source}: empty "a" column in a surface figure`);
    }
    result = renderSurface(tb, spec.labels ?? {});
  }
  writeFileSync(spec.output, result.svg);
  return result;
}

function openSvg(lines: string[], title: string | undefined): void {
  lines.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${H}" ` +
      `font-family="system-ui,sans-serif" font-size="12">`,
  );
  lines.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  if (title) {
    lines.push(
      `<text x="${W / 2}" y="24" text-anchor="middle" font-size="15">${escapeXml(title)}</text>`,
    );
  }
}

function axisLabels(lines: string[], xLabel: string, yLabel: string): void {
  lines.push(
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${H - 12}" text-anchor="middle">` +
      `${escapeXml(xLabel)}</text>`,
  );
  lines.push(
    `<text x="18" y="${MARGIN.top + PLOT_H / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${MARGIN.top + PLOT_H / 2})">${escapeXml(yLabel)}</text>`,
  );
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderCurve(
  curves: CurveTable[],
  labels: { title?: string; xLabel?: string; yLabel?: string },
): RenderResult {
  const tMin = Math.min(...curves.map((c) => Math.min(...c.t)));
  const tMax = Math.max(...curves.map((c) => Math.max(...c.t)));
  const vMin = Math.min(...curves.map((c) => Math.min(...c.values)));
  const vMax = Math.max(...curves.map((c) => Math.max(...c.values)));
  const pad = (vMax - vMin || 1) * 0.05;
  const sx = linearScale(tMin, tMax, MARGIN.left, MARGIN.left + PLOT_W);
  const sy = linearScale(vMin - pad, vMax + pad, MARGIN.top + PLOT_H, MARGIN.top);

  const lines: string[] = [];
  openSvg(lines, labels.title);
  for (const tick of niceTicks(tMin, tMax)) {
    const x = sx(tick);
    lines.push(
      `<line x1="${x.toFixed(2)}" y1="${MARGIN.top}" x2="${x.toFixed(2)}" ` +
        `y2="${MARGIN.top + PLOT_H}" stroke="#e5e7eb"/>`,
    );
    lines.push(
      `<text x="${x.toFixed(2)}" y="${MARGIN.top + PLOT_H + 18}" text-anchor="middle">` +
        `${fmt(tick)}</text>`,
    );
  }
  for (const tick of niceTicks(vMin - pad, vMax + pad)) {
    const y = sy(tick);
    lines.push(
      `<line x1="${MARGIN.left}" y1="${y.toFixed(2)}" x2="${MARGIN.left + PLOT_W}" ` +
        `y2="${y.toFixed(2)}" stroke="#e5e7eb"/>`,
    );
    lines.push(
      `<text x="${MARGIN.left - 8}" y="${(y + 4).toFixed(2)}" text-anchor="end">` +
        `${fmt(tick)}</text>`,
    );
  }
  lines.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${PLOT_W}" height="${PLOT_H}" ` +
      `fill="none" stroke="#374151"/>`,
  );

  const series: SeriesStats[] = [];
  curves.forEach((curve, idx) => {
    const color = PALETTE[idx % PALETTE.length];
    const points = curve.t
      .map((t, i) => `${sx(t).toFixed(2)},${sy(curve.values[i]).toFixed(2)}`)
      .join(" ");
    lines.push(`<polyline points="${points}" fill="none" stroke="${color}" stroke-width="1.8"/>`);
    series.push({
      source: curve.source,
      points: curve.t.length,
      min: Math.min(...curve.values),
      max: Math.max(...curve.values),
    });
  });
  if (curves.length > 1) {
    curves.forEach((curve, idx) => {
      const color = PALETTE[idx % PALETTE.length];
      const y = MARGIN.top + 16 + idx * 18;
      const x = MARGIN.left + PLOT_W - 180;
      lines.push(`<line x1="${x}" y1="${y - 4}" x2="${x + 24}" y2="${y - 4}" stroke="${color}" stroke-width="2"/>`);
      lines.push(`<text x="${x + 30}" y="${y}">${escapeXml(basename(curve.source))}</text>`);
    });
  }
  axisLabels(lines, labels.xLabel ?? "t (rad)", labels.yLabel ?? "value (bits)");
  lines.push("</svg>");
  return { svg: lines.join("\n") + "\n", series };
}

export function renderSurface(
  table: SurfaceTable,
  labels: { title?: string; xLabel?: string; yLabel?: string },
): RenderResult {
  const nT = table.t.length;
  const nA = table.a.length;
  const flat = table.values.flat();
  const vMin = Math.min(...flat);
  const vMax = Math.max(...flat);
  const span = vMax - vMin || 1;

  const plotW = PLOT_W - 56; // room for the colorbar
  const cellW = plotW / nT;
  const cellH = PLOT_H / nA;
  const sx = linearScale(Math.min(...table.t), Math.max(...table.t), MARGIN.left, MARGIN.left + plotW);
  const sa = linearScale(Math.min(...table.a), Math.max(...table.a), MARGIN.top + PLOT_H, MARGIN.top);

  const lines: string[] = [];
  openSvg(lines, labels.title);
  for (let ai = 0; ai < nA; ai++) {
    // a grows upward: row 0 sits at the bottom of the plot box
    const y = MARGIN.top + PLOT_H - (ai + 1) * cellH;
    for (let ti = 0; ti < nT; ti++) {
      const u = (table.values[ai][ti] - vMin) / span;
      const x = MARGIN.left + ti * cellW;
      lines.push(
        `<rect x="${x.toFixed(2)}" y="${y.toFixed(2)}" width="${(cellW + 0.5).toFixed(2)}" ` +
          `height="${(cellH + 0.5).toFixed(2)}" fill="${colormap(u)}"/>`,
      );
    }
  }
  lines.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${PLOT_H}" ` +
      `fill="none" stroke="#374151"/>`,
  );
  for (const tick of niceTicks(Math.min(...table.t), Math.max(...table.t))) {
    lines.push(
      `<text x="${sx(tick).toFixed(2)}" y="${MARGIN.top + PLOT_H + 18}" text-anchor="middle">` +
        `${fmt(tick)}</text>`,
    );
  }
  for (const tick of niceTicks(Math.min(...table.a), Math.max(...table.a), 5)) {
    lines.push(
      `<text x="${MARGIN.left - 8}" y="${(sa(tick) + 4).toFixed(2)}" text-anchor="end">` +
        `${fmt(tick)}</text>`,
    );
  }

  const barX = MARGIN.left + plotW + 16;
  const steps = 48;
  for (let i = 0; i < steps; i++) {
    const y = MARGIN.top + PLOT_H - ((i + 1) / steps) * PLOT_H;
    lines.push(
      `<rect x="${barX}" y="${y.toFixed(2)}" width="14" height="${(PLOT_H / steps + 0.5).toFixed(2)}" ` +
        `fill="${colormap(i / (steps - 1))}"/>`,
    );
  }
  lines.push(`<rect x="${barX}" y="${MARGIN.top}" width="14" height="${PLOT_H}" fill="none" stroke="#374151"/>`);
  lines.push(`<text x="${barX + 18}" y="${MARGIN.top + 10}">${fmt(vMax)}</text>`);
  lines.push(`<text x="${barX + 18}" y="${MARGIN.top + PLOT_H}">${fmt(vMin)}</text>`);

  axisLabels(lines, labels.xLabel ?? "t (rad)", labels.yLabel ?? "a");
  lines.push("</svg>");
  return {
    svg: lines.join("\n") + "\n",
    series: [{ source: table.source, points: nT * nA, min: vMin, max: vMax }],
  };
}
