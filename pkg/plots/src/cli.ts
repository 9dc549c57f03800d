/**
 * CLI: render --kind curve|surface --in <csv>... --out <img> --title <text>
 *
 * Exit codes: 0 success, 1 malformed CSV or I/O failure, 2 usage error.
 * Nothing is written on failure.
 */

import { CsvFormatError } from "./csv.js";
import { render, type FigureSpec } from "./render.js";

const USAGE =
  "usage: render --kind curve|surface --in <csv> [<csv> ...] --out <img> [--title <text>]";

export function parseArgs(argv: string[]): FigureSpec {
  if (argv[0] !== "render") {
    throw new UsageError(`unknown command ${argv[0] ?? "<none>"}; ${USAGE}`);
  }
  let kind: "curve" | "surface" | null = null;
  const inputs: string[] = [];
  let output: string | null = null;
  let title: string | undefined;
  let i = 1;
  while (i < argv.length) {
    const flag = argv[i];
    if (flag === "--kind") {
      const v = argv[++i];
      if (v !== "curve" && v !== "surface") throw new UsageError(`--kind must be curve or surface`);
      kind = v;
    } else if (flag === "--in") {
      i += 1;
      while (i < argv.length && !argv[i].startsWith("--")) {
        inputs.push(argv[i]);
        i += 1;
      }
      i -= 1;
    } else if (flag === "--out") {
      output = argv[++i];
    } else if (flag === "--title") {
      title = argv[++i];
    } else {
      throw new UsageError(`unknown flag ${flag}; ${USAGE}`);
    }
    i += 1;
  }
  if (kind === null || inputs.length === 0 || !output) {
    throw new UsageError(USAGE);
  }
  return { kind, inputs, output, labels: { title } };
}

class UsageError extends Error {}

export function main(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  try {
    const result = render(spec);
    for (const s of result.series) {
      console.error(`${s.source}: ${s.points} points, range [${s.min}, ${s.max}]`);
    }
    return 0;
  } catch (err) {
    if (err instanceof CsvFormatError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}
