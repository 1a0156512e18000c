import { readFileSync } from "node:fs";

/** One parsed CSV: '#'-header metadata, column names, numeric rows. */
export interface Table {
  meta: Record<string, string>;
  columns: string[];
  rows: number[][];
}

export function parseCsv(text: string): Table {
  const meta: Record<string, string> = {};
  const rows: number[][] = [];
  let columns: string[] | null = null;
  for (const raw of text.split("\n")) {
    const line = raw.trimEnd();
    if (line === "") continue;
    if (line.startsWith("#")) {
      const eq = line.indexOf("=");
      if (eq >= 0) {
        meta[line.slice(1, eq).trim()] = line.slice(eq + 1).trim();
      }
      continue;
    }
    if (columns === null) {
      columns = line.split(",").map((c) => c.trim());
      continue;
    }
    const values = line.split(",").map(Number);
    if (values.some((v) => Number.isNaN(v))) {
      throw new Error(`non-numeric row: ${line}`);
    }
    rows.push(values);
  }
  if (columns === null || rows.length === 0) {
    throw new Error("empty CSV: no header or data rows");
  }
  return { meta, columns, rows };
}

export function readTable(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch {
    throw new Error(`cannot read ${path}`);
  }
  try {
    return parseCsv(text);
  } catch (err) {
    throw new Error(`${path}: ${(err as Error).message}`);
  }
}

export function column(table: Table, name: string): number[] {
  const i = table.columns.indexOf(name);
  if (i < 0) {
    throw new Error(
      `missing column '${name}' (have ${table.columns.join(", ")})`,
    );
  }
  return table.rows.map((r) => r[i]);
}

/** Numeric metadata value; every guide line drawn must come through here. */
export function metaNumber(table: Table, key: string): number {
  const raw = table.meta[key];
  if (raw === undefined) throw new Error(`missing metadata key '${key}'`);
  const value = Number(raw);
  if (Number.isNaN(value)) {
    throw new Error(`metadata key '${key}' is not numeric: ${raw}`);
  }
  return value;
}
