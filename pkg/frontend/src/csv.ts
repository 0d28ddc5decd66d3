/** Strict CSV reading for the fixed schemas the renderers consume. */

import { readFileSync } from "node:fs";

export class SchemaError extends Error {}

export interface Table {
  header: string[];
  rows: string[][];
}

export function readCsv(path: string, expectedHeader: string): Table {
  const text = readFileSync(path, "utf8");
  const lines = text.split(/\r?\n/).filter((ln) => ln.length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${path}: empty file`);
  }
  if (lines[0] !== expectedHeader) {
    throw new SchemaError(
      `${path}: header mismatch\n  expected: ${expectedHeader}\n  found:    ${lines[0]}`,
    );
  }
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((ln, i) => {
    const cols = ln.split(",");
    if (cols.length !== header.length) {
      throw new SchemaError(`${path}: row ${i + 2} has ${cols.length} columns, expected ${header.length}`);
    }
    return cols;
  });
  if (rows.length === 0) {
    throw new SchemaError(`${path}: no data rows`);
  }
  return { header, rows };
}

export function num(table: Table, row: string[], column: string): number {
  const i = table.header.indexOf(column);
  if (i < 0) throw new SchemaError(`missing column ${column}`);
  const v = Number(row[i]);
  if (!Number.isFinite(v)) {
    throw new SchemaError(`non-numeric value ${JSON.stringify(row[i])} in column ${column}`);
  }
  return v;
}

export function str(table: Table, row: string[], column: string): string {
  const i = table.header.indexOf(column);
  if (i < 0) throw new SchemaError(`missing column ${column}`);
  return row[i];
}

/** Like num(), but empty cells (inapplicable bounds) come back as null. */
export function numOrNull(table: Table, row: string[], column: string): number | null {
  const i = table.header.indexOf(column);
  if (i < 0) throw new SchemaError(`missing column ${column}`);
  if (row[i] === "") return null;
  return num(table, row, column);
}
