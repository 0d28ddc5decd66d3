/**
 * Entropy-vs-exponent chart from the figure1 CSV, plus the crossover
 * bracket report.  The bracket comes from the CSV numbers, never from
 * rendered pixels.
 */

import { writeFileSync } from "node:fs";

import { num, readCsv } from "./csv.js";
import { renderLineChart, Series } from "./chart.js";
import { encodePng } from "./png.js";
import { Color } from "./raster.js";

export const FIGURE1_HEADER = "rho,H,eta,kappa_opt,lambda_opt,simplified";

const BLUE: Color = [31, 119, 180, 255];
const RED: Color = [214, 39, 40, 255];
const GREEN: Color = [44, 160, 44, 255];

export interface Fig1Options {
  simplified?: boolean;   // draw the H/2+3/8 overlay (default true)
  shading?: boolean;      // shade rho >= 0.2 (default true)
  width?: number;
  height?: number;
}

export interface Fig1Report {
  /** (lo, hi]: the exponent first drops below the entropy inside this gap. */
  bracket: [number, number] | null;
  /** First grid rho with eta < H, if any. */
  firstBelow: number | null;
  /** Grid points at rho >= 0.2 where the exponent fails to beat entropy. */
  violations: number[];
  rows: number;
}

export function analyzeFig1(points: Array<{ rho: number; H: number; eta: number }>): Fig1Report {
  const sorted = [...points].sort((a, b) => a.rho - b.rho);
  let bracket: [number, number] | null = null;
  let firstBelow: number | null = null;
  let prevAbove: number | null = null;
  const violations: number[] = [];
  for (const p of sorted) {
    const below = p.eta < p.H;
    if (below && firstBelow === null) {
      firstBelow = p.rho;
      if (prevAbove !== null) bracket = [prevAbove, p.rho];
    }
    if (!below) {
      prevAbove = p.rho;
      if (p.rho >= 0.2) violations.push(p.rho);
    }
  }
  return { bracket, firstBelow, violations, rows: sorted.length };
}

export function renderFig1(csvPath: string, outPath: string,
                           opts: Fig1Options = {}): Fig1Report {
  const table = readCsv(csvPath, FIGURE1_HEADER);
  const points = table.rows.map((row) => ({
    rho: num(table, row, "rho"),
    H: num(table, row, "H"),
    eta: num(table, row, "eta"),
    simplified: num(table, row, "simplified"),
  }));
  points.sort((a, b) => a.rho - b.rho);

  const series: Series[] = [
    { label: "H", color: BLUE, thickness: 2, points: points.map((p) => [p.rho, p.H]) },
    { label: "eta", color: RED, thickness: 2, points: points.map((p) => [p.rho, p.eta]) },
  ];
  if (opts.simplified !== false) {
    series.push({
      label: "H/2+3/8",
      color: GREEN,
      dash: [4, 3],
      points: points.map((p) => [p.rho, p.simplified]),
    });
  }
  const img = renderLineChart({
    width: opts.width ?? 640,
    height: opts.height ?? 440,
    xLabel: "rho",
    yLabel: "exponent",
    series,
    shadeFrom: opts.shading !== false ? 0.2 : undefined,
  });
  writeFileSync(outPath, encodePng(img.width, img.height, img.pixels));
  return analyzeFig1(points);
}

export function formatFig1Report(report: Fig1Report): string {
  const lines: string[] = [];
  if (report.bracket) {
    lines.push(
      `exponent first drops below entropy between rho=${report.bracket[0].toFixed(4)} and rho=${report.bracket[1].toFixed(4)}`,
    );
  } else if (report.firstBelow !== null) {
    lines.push(`exponent is below entropy from the first grid point rho=${report.firstBelow.toFixed(4)}`);
  } else {
    lines.push("exponent never drops below entropy on this grid");
  }
  if (report.violations.length === 0) {
    lines.push("every grid point with rho >= 0.2 has eta < H");
  } else {
    lines.push(`WARNING: eta >= H at rho >= 0.2: ${report.violations.join(", ")}`);
  }
  return lines.join("\n");
}
