import { describe, expect, it } from "vitest";

import { column, parseCsv, requireColumns } from "../src/csv.js";

describe("parseCsv", () => {
  it("parses header and numeric rows", () => {
    const table = parseCsv("a,b\n1,2\n3,4.5\n", "inline");
    expect(table.header).toEqual(["a", "b"]);
    expect(table.rows).toEqual([
      [1, 2],
      [3, 4.5],
    ]);
  });

  it("rejects an empty document", () => {
    expect(() => parseCsv("", "inline")).toThrow("empty file");
  });

  it("rejects a header-only document", () => {
    expect(() => parseCsv("a,b\n", "inline")).toThrow("no data rows");
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1\n", "inline")).toThrow("row 1");
  });

  it("rejects non-numeric cells", () => {
    expect(() => parseCsv("a,b\n1,apple\n", "inline")).toThrow('"apple"');
  });
});

describe("requireColumns", () => {
  it("accepts an exact header", () => {
    const table = parseCsv("a,b\n1,2\n", "inline");
    expect(() => requireColumns(table, ["a", "b"], "inline")).not.toThrow();
  });

  it("reports missing and unexpected columns", () => {
    const table = parseCsv("a,c\n1,2\n", "inline");
    expect(() => requireColumns(table, ["a", "b"], "inline")).toThrow(
      /missing \[b\], unexpected \[c\]/
    );
  });
});

describe("column", () => {
  it("extracts by name", () => {
    const table = parseCsv("a,b\n1,2\n3,4\n", "inline");
    expect(column(table, "b")).toEqual([2, 4]);
  });

  it("rejects unknown names", () => {
    const table = parseCsv("a,b\n1,2\n", "inline");
    expect(() => column(table, "z")).toThrow("no column named z");
  });
});
