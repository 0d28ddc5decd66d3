#!/usr/bin/env node
/**
 * render-fig1 <in.csv> <out.png> [--no-simplified] [--no-shading]
 * render-sums <in.csv> <out.png>
 *
 * Exit codes: 0 ok, 1 schema/data error, 2 usage error.
 */

import { SchemaError } from "./csv.js";
import { formatFig1Report, renderFig1 } from "./fig1.js";
import { renderSums } from "./sums.js";

const USAGE = `usage:
  render-fig1 <in.csv> <out.png> [--no-simplified] [--no-shading]
  render-sums <in.csv> <out.png>`;

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  const flags = new Set(rest.filter((a) => a.startsWith("--")));
  const positional = rest.filter((a) => !a.startsWith("--"));

  if (command === "render-fig1") {
    if (positional.length !== 2) {
      console.error(USAGE);
      return 2;
    }
    const known = new Set(["--no-simplified", "--no-shading"]);
    for (const f of flags) {
      if (!known.has(f)) {
        console.error(`unknown flag ${f}\n${USAGE}`);
        return 2;
      }
    }
    try {
      const report = renderFig1(positional[0], positional[1], {
        simplified: !flags.has("--no-simplified"),
        shading: !flags.has("--no-shading"),
      });
      console.log(`wrote ${positional[1]} (${report.rows} grid points)`);
      console.log(formatFig1Report(report));
      return 0;
    } catch (err) {
      return reportError(err);
    }
  }
  if (command === "render-sums") {
    if (positional.length !== 2 || flags.size > 0) {
      console.error(USAGE);
      return 2;
    }
    try {
      const report = renderSums(positional[0], positional[1]);
      console.log(`wrote ${positional[1]} (${report.rows} rows)`);
      if (!report.withinTrivial) {
        console.log("WARNING: some |S| exceeds its trivial bound; check the data");
      }
      return 0;
    } catch (err) {
      return reportError(err);
    }
  }
  console.error(USAGE);
  return 2;
}

function reportError(err: unknown): number {
  if (err instanceof SchemaError) {
    console.error(`schema error: ${err.message}`);
    return 1;
  }
  if (err instanceof Error && (err as NodeJS.ErrnoException).code === "ENOENT") {
    console.error(`error: ${err.message}`);
    return 1;
  }
  throw err;
}

const isDirectRun = process.argv[1] !== undefined
  && import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (isDirectRun) {
  process.exit(main(process.argv.slice(2)));
}
