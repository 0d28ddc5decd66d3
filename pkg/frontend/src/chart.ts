/** Line-chart scaffolding: linear scales, ticks, axes, legend, series. */

import { textWidth } from "./font.js";
import { BLACK, Color, GRAY, Raster } from "./raster.js";

export interface Margins {
  top: number;
  right: number;
  bottom: number;
  left: number;
}

export const DEFAULT_MARGINS: Margins = { top: 16, right: 16, bottom: 36, left: 52 };

export class LinearScale {
  constructor(
    readonly d0: number,
    readonly d1: number,
    readonly r0: number,
    readonly r1: number,
  ) {}

  map(v: number): number {
    const t = this.d1 === this.d0 ? 0.5 : (v - this.d0) / (this.d1 - this.d0);
    return this.r0 + t * (this.r1 - this.r0);
  }
}

/** Round tick step: 1/2/5 x 10^k giving roughly the asked-for count. */
export function ticks(lo: number, hi: number, count = 6): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const rawStep = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= rawStep) {
      step = m * mag;
      break;
    }
  }
  const out: number[] = [];
  const first = Math.ceil(lo / step) * step;
  for (let v = first; v <= hi + step * 1e-9; v += step) {
    out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return out;
}

export function formatTick(v: number): string {
  if (v === Math.round(v) && Math.abs(v) < 1e6) return String(Math.round(v));
  const s = v.toFixed(2);
  return s;
}

export interface Series {
  label: string;
  color: Color;
  points: Array<[number, number]>;
  dash?: [number, number];
  thickness?: number;
}

export interface ChartSpec {
  width: number;
  height: number;
  xLabel: string;
  yLabel: string;
  series: Series[];
  margins?: Margins;
  /** Shade the plot background for x >= this domain value. */
  shadeFrom?: number;
  shadeColor?: Color;
  yPad?: number;
}

export function renderLineChart(spec: ChartSpec): Raster {
  const m = spec.margins ?? DEFAULT_MARGINS;
  const img = new Raster(spec.width, spec.height);
  const x0 = m.left;
  const x1 = spec.width - m.right;
  const y0 = spec.height - m.bottom;
  const y1 = m.top;

  const xs = spec.series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = spec.series.flatMap((s) => s.points.map((p) => p[1]));
  if (xs.length === 0) throw new Error("nothing to draw");
  const pad = spec.yPad ?? 0.04;
  const ySpan = Math.max(Math.max(...ys) - Math.min(...ys), 1e-9);
  const xScale = new LinearScale(Math.min(...xs), Math.max(...xs), x0, x1);
  const yScale = new LinearScale(
    Math.min(...ys) - pad * ySpan,
    Math.max(...ys) + pad * ySpan,
    y0,
    y1,
  );

  if (spec.shadeFrom !== undefined && spec.shadeFrom <= xScale.d1) {
    const sx = Math.max(x0, Math.round(xScale.map(spec.shadeFrom)));
    img.fillRect(sx, y1, x1 - sx, y0 - y1, spec.shadeColor ?? [255, 243, 205, 255]);
  }

  for (const tx of ticks(xScale.d0, xScale.d1)) {
    const px = Math.round(xScale.map(tx));
    img.line(px, y1, px, y0, [235, 235, 235, 255]);
    img.line(px, y0, px, y0 + 3, BLACK);
    const label = formatTick(tx);
    img.text(px - textWidth(label) / 2, y0 + 6, label);
  }
  for (const ty of ticks(yScale.d0, yScale.d1)) {
    const py = Math.round(yScale.map(ty));
    img.line(x0, py, x1, py, [235, 235, 235, 255]);
    img.line(x0 - 3, py, x0, py, BLACK);
    const label = formatTick(ty);
    img.text(x0 - 6 - textWidth(label), py - 3, label);
  }
  img.line(x0, y0, x1, y0, BLACK);
  img.line(x0, y0, x0, y1, BLACK);
  img.text((x0 + x1) / 2 - textWidth(spec.xLabel) / 2, y0 + 20, spec.xLabel);
  img.textVertical(8, (y0 + y1) / 2 + textWidth(spec.yLabel) / 2, spec.yLabel);

  for (const s of spec.series) {
    const phase = { t: 0 };
    for (let i = 1; i < s.points.length; i++) {
      img.line(
        xScale.map(s.points[i - 1][0]), yScale.map(s.points[i - 1][1]),
        xScale.map(s.points[i][0]), yScale.map(s.points[i][1]),
        s.color, s.thickness ?? 1, s.dash, phase,
      );
    }
    if (s.points.length === 1) {
      const [px, py] = s.points[0];
      img.line(xScale.map(px) - 1, yScale.map(py), xScale.map(px) + 1, yScale.map(py),
               s.color, s.thickness ?? 2);
    }
  }

  // legend, top-left inside the plot area
  let ly = y1 + 6;
  for (const s of spec.series) {
    const lx = x0 + 10;
    img.line(lx, ly + 3, lx + 16, ly + 3, s.color, s.thickness ?? 1, s.dash);
    img.text(lx + 20, ly, s.label);
    ly += 11;
  }
  return img;
}

export { GRAY };
