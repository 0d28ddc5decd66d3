/**
 * Bound-vs-exact-sum chart from the sums CSV: one x-position per row,
 * log2-space magnitudes against the trivial and subspace-decomposition
 * bounds (the latter only where the CSV marks it applicable).
 */

import { writeFileSync } from "node:fs";

import { num, numOrNull, readCsv, str } from "./csv.js";
import { renderLineChart, Series } from "./chart.js";
import { encodePng } from "./png.js";
import { Color } from "./raster.js";

export const SUMS_HEADER =
  "q,r,s,domain,f1,f2,k,zeta,abs_sum,points,dropped,trivial_log2,thm1_log2";

const PURPLE: Color = [120, 60, 160, 255];
const ORANGE: Color = [230, 140, 30, 255];
const TEAL: Color = [0, 140, 140, 255];

export interface SumsReport {
  rows: number;
  /** True when no |S| exceeds its trivial bound (after rounding slack). */
  withinTrivial: boolean;
}

export function renderSums(csvPath: string, outPath: string,
                           opts: { width?: number; height?: number } = {}): SumsReport {
  const table = readCsv(csvPath, SUMS_HEADER);
  const rows = table.rows.map((row, i) => ({
    x: i,
    label: str(table, row, "domain"),
    abs: num(table, row, "abs_sum"),
    trivial: num(table, row, "trivial_log2"),
    bound: numOrNull(table, row, "thm1_log2"),
  }));

  // zero sums have no log2; clamp them one unit under everything else
  const finite = rows.filter((r) => r.abs > 0).map((r) => Math.log2(r.abs));
  const floor = Math.min(0, ...finite, ...rows.map((r) => r.trivial)) - 1;
  const logAbs = rows.map((r) => (r.abs > 0 ? Math.log2(r.abs) : floor));

  const series: Series[] = [
    { label: "log2|S|", color: PURPLE, thickness: 2, points: rows.map((r, i) => [r.x, logAbs[i]]) },
    { label: "trivial", color: ORANGE, points: rows.map((r) => [r.x, r.trivial]) },
  ];
  const bounded = rows.filter((r) => r.bound !== null);
  if (bounded.length > 0) {
    series.push({
      label: "bound",
      color: TEAL,
      dash: [4, 3],
      points: bounded.map((r) => [r.x, r.bound as number]),
    });
  }
  const img = renderLineChart({
    width: opts.width ?? 640,
    height: opts.height ?? 440,
    xLabel: "row",
    yLabel: "log2",
    series,
  });
  writeFileSync(outPath, encodePng(img.width, img.height, img.pixels));
  const withinTrivial = rows.every((r, i) => logAbs[i] <= r.trivial + 1e-6);
  return { rows: rows.length, withinTrivial };
}
