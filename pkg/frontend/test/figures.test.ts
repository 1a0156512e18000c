import { describe, expect, it } from "vitest";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { parseCsv, readTable, column, metaNumber } from "../src/csv.js";
import { viridis } from "../src/colormap.js";
import { ticks } from "../src/svg.js";
import { renderFig1 } from "../src/fig1.js";
import { renderFig2 } from "../src/fig2.js";
import { renderFig3 } from "../src/fig3.js";
import { run } from "../src/cli.js";

const FIX = join(dirname(fileURLToPath(import.meta.url)), "fixtures");
const corr = () => [
  readTable(join(FIX, "corr_chaotic.csv")),
  readTable(join(FIX, "corr_regular.csv")),
];
const echo = () => [
  readTable(join(FIX, "echo_chaotic.csv")),
  readTable(join(FIX, "echo_regular.csv")),
];
const wigner = (regime: string) => {
  const index = readTable(join(FIX, `wigner_${regime}.csv`));
  const snapshots = index.meta["snapshot_files"]
    .split(";")
    .map((f) => readTable(join(FIX, f)));
  return { index, snapshots };
};

describe("csv", () => {
  it("parses metadata, columns and rows", () => {
    const t = parseCsv("# a = 1\n# b = x y\nt,C\n0,1\n2,3\n");
    expect(t.meta).toEqual({ a: "1", b: "x y" });
    expect(t.columns).toEqual(["t", "C"]);
    expect(t.rows).toEqual([
      [0, 1],
      [2, 3],
    ]);
    expect(column(t, "C")).toEqual([1, 3]);
    expect(metaNumber(t, "a")).toBe(1);
  });

  it("rejects empty and malformed input", () => {
    expect(() => parseCsv("")).toThrow(/empty/);
    expect(() => parseCsv("# a = 1\n")).toThrow(/empty/);
    expect(() => parseCsv("t,C\n0,nope\n")).toThrow(/non-numeric/);
    const t = parseCsv("t,C\n0,1\n");
    expect(() => column(t, "D")).toThrow(/missing column 'D'/);
    expect(() => metaNumber(t, "sigma")).toThrow(/missing metadata/);
  });
});

describe("colormap", () => {
  it("spans viridis endpoints and clamps", () => {
    expect(viridis(0)).toBe("#440154");
    expect(viridis(1)).toBe("#fde725");
    expect(viridis(-5)).toBe(viridis(0));
    expect(viridis(7)).toBe(viridis(1));
  });
});

describe("ticks", () => {
  it("produces round numbers covering the range", () => {
    const t = ticks(0, 50, 6);
    expect(t[0]).toBe(0);
    expect(t[t.length - 1]).toBe(50);
    expect(t).toContain(10);
  });
});

describe("fig1", () => {
  it("renders from the fixture CSVs", () => {
    const svg = renderFig1(corr());
    expect(svg).toContain("<svg");
    expect(svg).toContain("</svg>");
    expect(svg).toContain("stroke-dasharray"); // guide lines present
  });

  it("draws the 2-sigma guide from CSV metadata, not a constant", () => {
    const tables = corr();
    const before = renderFig1(tables);
    tables[0].meta["sigma"] = String(2 * metaNumber(tables[0], "sigma"));
    const after = renderFig1(tables);
    expect(after).not.toBe(before);
  });

  it("rejects a missing regime", () => {
    expect(() => renderFig1([corr()[0]])).toThrow(/regular/);
  });
});

describe("fig2", () => {
  it("renders main panel and inset", () => {
    const svg = renderFig2(echo());
    expect(svg).toContain("F_P");
    expect(svg).toContain("|F|⁴");
  });

  it("requires echo columns", () => {
    expect(() => renderFig2(corr())).toThrow(/missing column/);
  });
});

describe("fig3", () => {
  it("renders both strips with the purity frame", () => {
    const svg = renderFig3(wigner("chaotic"), wigner("regular"));
    expect(svg).toContain("chaotic");
    expect(svg).toContain("regular");
    expect((svg.match(/<circle/g) ?? []).length).toBe(10); // 5 snapshots x 2
  });

  it("shared-scale changes the rendering", () => {
    const a = renderFig3(wigner("chaotic"), wigner("regular"));
    const b = renderFig3(wigner("chaotic"), wigner("regular"), {
      sharedScale: true,
    });
    expect(b).not.toBe(a);
  });

  it("rejects snapshot/index mismatch", () => {
    const bad = wigner("chaotic");
    bad.snapshots = bad.snapshots.slice(1);
    expect(() => renderFig3(bad, wigner("regular"))).toThrow(/snapshots/);
  });
});

describe("cli", () => {
  const out = () => join(mkdtempSync(join(tmpdir(), "plot-")), "fig.svg");

  it("renders each figure end to end", () => {
    for (const [fig, inputs] of [
      ["fig1", ["corr_chaotic.csv", "corr_regular.csv"]],
      ["fig2", ["echo_chaotic.csv", "echo_regular.csv"]],
      ["fig3", ["wigner_chaotic.csv", "wigner_regular.csv"]],
    ] as const) {
      const target = out();
      const argv = [fig];
      for (const f of inputs) argv.push("--in", join(FIX, f));
      argv.push("--out", target);
      expect(run(argv)).toBe(0);
      expect(readFileSync(target, "utf8")).toContain("</svg>");
    }
  });

  it("regenerates byte-identically from identical CSVs", () => {
    for (const [fig, inputs] of [
      ["fig1", ["corr_chaotic.csv", "corr_regular.csv"]],
      ["fig2", ["echo_chaotic.csv", "echo_regular.csv"]],
      ["fig3", ["wigner_chaotic.csv", "wigner_regular.csv"]],
    ] as const) {
      const [a, b] = [out(), out()];
      for (const target of [a, b]) {
        const argv = [fig];
        for (const f of inputs) argv.push("--in", join(FIX, f));
        argv.push("--out", target);
        expect(run(argv)).toBe(0);
      }
      expect(readFileSync(a)).toEqual(readFileSync(b));
    }
  });

  it("fails with a nonzero exit on an empty CSV", () => {
    const dir = mkdtempSync(join(tmpdir(), "plot-"));
    const empty = join(dir, "empty.csv");
    writeFileSync(empty, "");
    expect(run(["fig1", "--in", empty, "--out", join(dir, "o.svg")])).toBe(1);
  });

  it("rejects bad usage", () => {
    expect(run(["fig9"])).toBe(2);
    expect(run(["fig1", "--in", "x.csv"])).toBe(2); // no --out
  });
});
