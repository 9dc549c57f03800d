/**
 * Parser for sweep CSV files with header `t,a,value`.
 *
 * Curves leave the `a` column empty on every row; surfaces fill it on every
 * row, in a-major blocks that all share one t axis. Anything else is a
 * format error.
 */

export class CsvFormatError extends Error {}

export interface SweepRow {
  t: number;
  a: number | null;
  value: number;
}

export interface CurveTable {
  kind: "curve";
  source: string;
  t: number[];
  values: number[];
}

export interface SurfaceTable {
  kind: "surface";
  source: string;
  t: number[];
  a: number[];
  /** values[aIndex][tIndex] */
  values: number[][];
}

export type SweepTable = CurveTable | SurfaceTable;

export function parseSweepCsv(text: string, source = "<csv>"): SweepTable {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0) throw new CsvFormatError(`${source}: empty file`);
  if (lines[0] !== "t,a,value") {
    throw new CsvFormatError(`${source}: expected header "t,a,value", got "${lines[0]}"`);
  }
  if (lines.length === 1) throw new CsvFormatError(`${source}: no data rows`);

  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== 3) {
      throw new CsvFormatError(`${source}:${i + 1}: expected 3 columns, got ${parts.length}`);
    }
    const t = Number(parts[0]);
    const a = parts[1] === "" ? null : Number(parts[1]);
    const value = Number(parts[2]);
    if (parts[0] === "" || !Number.isFinite(t) || parts[2] === "" || !Number.isFinite(value) ||
        (a !== null && !Number.isFinite(a))) {
      throw new CsvFormatError(`${source}:${i + 1}: non-numeric entry in "${lines[i]}"`);
    }
    rows.push({ t, a, value });
  }

  const filled = rows.filter((r) => r.a !== null).length;
  if (filled === 0) {
    return {
      kind: "curve",
      source,
      t: rows.map((r) => r.t),
      values: rows.map((r) => r.value),
    };
  }
  if (filled !== rows.length) {
    throw new CsvFormatError(`${source}: mixed empty and filled "a" column`);
  }

  const aAxis: number[] = [];
  const blocks: SweepRow[][] = [];
  for (const row of rows) {
    const a = row.a as number;
    if (aAxis.length === 0 || a !== aAxis[aAxis.length - 1]) {
      if (aAxis.includes(a)) {
        throw new CsvFormatError(`${source}: rows for a=${a} are not contiguous`);
      }
      aAxis.push(a);
      blocks.push([]);
    }
    blocks[blocks.length - 1].push(row);
  }
  const tAxis = blocks[0].map((r) => r.t);
  for (const block of blocks) {
    if (block.length !== tAxis.length || block.some((r, j) => r.t !== tAxis[j])) {
      throw new CsvFormatError(`${source}: "a" blocks do not share one t axis`);
    }
  }
  return {
    kind: "surface",
    source,
    t: tAxis,
    a: aAxis,
    values: blocks.map((b) => b.map((r) => r.value)),
  };
}
