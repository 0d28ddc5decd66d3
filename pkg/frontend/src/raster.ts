/** RGBA raster with the handful of drawing ops a line chart needs. */

import { GLYPH_H, GLYPH_W, glyph } from "./font.js";

export type Color = [number, number, number, number];

export const BLACK: Color = [30, 30, 30, 255];
export const GRAY: Color = [190, 190, 190, 255];
export const WHITE: Color = [255, 255, 255, 255];

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array;

  constructor(width: number, height: number, background: Color = WHITE) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.pixels.set(background, i * 4);
    }
  }

  set(x: number, y: number, c: Color): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    const a = c[3] / 255;
    this.pixels[i] = c[0] * a + this.pixels[i] * (1 - a);
    this.pixels[i + 1] = c[1] * a + this.pixels[i + 1] * (1 - a);
    this.pixels[i + 2] = c[2] * a + this.pixels[i + 2] * (1 - a);
    this.pixels[i + 3] = 255;
  }

  fillRect(x0: number, y0: number, w: number, h: number, c: Color): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) {
        this.set(x, y, c);
      }
    }
  }

  /**
   * Bresenham polyline segment; thickness is a small disc stamped per step,
   * dash phase advances along the path when a pattern is given.
   */
  line(x0: number, y0: number, x1: number, y1: number, c: Color,
       thickness = 1, dash?: [number, number], phase = { t: 0 }): void {
    let x = Math.round(x0);
    let y = Math.round(y0);
    const ex = Math.round(x1);
    const ey = Math.round(y1);
    const dx = Math.abs(ex - x);
    const dy = -Math.abs(ey - y);
    const sx = x < ex ? 1 : -1;
    const sy = y < ey ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      const on = !dash || phase.t % (dash[0] + dash[1]) < dash[0];
      if (on) {
        if (thickness <= 1) {
          this.set(x, y, c);
        } else {
          const r = thickness / 2;
          for (let oy = -Math.ceil(r); oy <= Math.ceil(r); oy++) {
            for (let ox = -Math.ceil(r); ox <= Math.ceil(r); ox++) {
              if (ox * ox + oy * oy <= r * r) this.set(x + ox, y + oy, c);
            }
          }
        }
      }
      phase.t += 1;
      if (x === ex && y === ey) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  text(x: number, y: number, s: string, c: Color = BLACK): void {
    let cx = Math.round(x);
    for (const ch of s) {
      const rows = glyph(ch);
      for (let gy = 0; gy < GLYPH_H; gy++) {
        for (let gx = 0; gx < GLYPH_W; gx++) {
          if (rows[gy][gx] === "X") this.set(cx + gx, y + gy, c);
        }
      }
      cx += GLYPH_W + 1;
    }
  }

  /** Vertical text, rotated 90 degrees counterclockwise. */
  textVertical(x: number, y: number, s: string, c: Color = BLACK): void {
    let cy = Math.round(y);
    for (const ch of s) {
      const rows = glyph(ch);
      for (let gy = 0; gy < GLYPH_H; gy++) {
        for (let gx = 0; gx < GLYPH_W; gx++) {
          if (rows[gy][gx] === "X") this.set(x + gy, cy - gx, c);
        }
      }
      cy -= GLYPH_W + 1;
    }
  }
}
