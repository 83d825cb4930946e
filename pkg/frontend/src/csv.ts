import { readFileSync } from "node:fs";

export interface CsvTable {
  header: string[];
  rows: number[][];
}

/** Parse a plain numeric CSV (comma separated, mandatory header, no quoting). */
export function parseCsv(text: string, source: string): CsvTable {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error(`${source}: empty file`);
  }
  const header = lines[0].split(",");
  const rows = lines.slice(1).map((line, index) => {
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new Error(
        `${source}: row ${index + 1} has ${cells.length} cells, expected ${header.length}`
      );
    }
    return cells.map((cell) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new Error(`${source}: non-numeric cell ${JSON.stringify(cell)} in row ${index + 1}`);
      }
      return value;
    });
  });
  if (rows.length === 0) {
    throw new Error(`${source}: no data rows`);
  }
  return { header, rows };
}

export function readCsv(path: string): CsvTable {
  return parseCsv(readFileSync(path, "utf8"), path);
}

/** Throw with an explicit column diff unless the header matches exactly. */
export function requireColumns(table: CsvTable, expected: string[], source: string): void {
  const missing = expected.filter((name) => !table.header.includes(name));
  const unexpected = table.header.filter((name) => !expected.includes(name));
  if (missing.length > 0 || unexpected.length > 0) {
    throw new Error(
      `${source}: column mismatch; expected [${expected.join(", ")}], ` +
        `found [${table.header.join(", ")}]; missing [${missing.join(", ")}], ` +
        `unexpected [${unexpected.join(", ")}]`
    );
  }
}

export function column(table: CsvTable, name: string): number[] {
  const index = table.header.indexOf(name);
  if (index < 0) {
    throw new Error(`no column named ${name}`);
  }
  return table.rows.map((row) => row[index]);
}
