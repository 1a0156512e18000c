#!/usr/bin/env node
import { writeFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { Table, readTable } from "./csv.js";
import { renderFig1 } from "./fig1.js";
import { renderFig2 } from "./fig2.js";
import { WignerRun, renderFig3 } from "./fig3.js";

const USAGE = `usage: plot fig1|fig2|fig3 --in <csv> [--in <csv> ...] --out <svg>
                [--shared-scale]

fig1  correlation growth rates (chaotic + regular correlations CSVs)
fig2  purity-fidelity and |F|^4 echo curves (chaotic + regular echo CSVs)
fig3  Wigner snapshot strips (chaotic + regular snapshot index CSVs)
`;

interface Args {
  figure: string;
  inputs: string[];
  out: string;
  sharedScale: boolean;
}

function parseArgs(argv: string[]): Args {
  const [figure, ...rest] = argv;
  if (!["fig1", "fig2", "fig3"].includes(figure ?? "")) {
    throw new Error(USAGE);
  }
  const inputs: string[] = [];
  let out = "";
  let sharedScale = false;
  for (let i = 0; i < rest.length; i++) {
    switch (rest[i]) {
      case "--in":
        inputs.push(rest[++i]);
        break;
      case "--out":
        out = rest[++i];
        break;
      case "--shared-scale":
        sharedScale = true;
        break;
      default:
        throw new Error(`unknown argument ${rest[i]}\n${USAGE}`);
    }
  }
  if (inputs.length === 0 || inputs.some((p) => p === undefined)) {
    throw new Error(`at least one --in CSV is required\n${USAGE}`);
  }
  if (!out) throw new Error(`--out is required\n${USAGE}`);
  return { figure, inputs, out, sharedScale };
}

function loadWignerRun(indexPath: string): WignerRun {
  const index = readTable(indexPath);
  const files = index.meta["snapshot_files"];
  if (!files) {
    throw new Error(`${indexPath}: missing snapshot_files metadata`);
  }
  const dir = dirname(indexPath);
  const snapshots = files.split(";").map((f) => readTable(join(dir, f)));
  return { index, snapshots };
}

export function run(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`${(err as Error).message}\n`);
    return 2;
  }
  try {
    let rendered: string;
    if (args.figure === "fig3") {
      const runs = args.inputs.map(loadWignerRun);
      const chaotic = runs.find((r) => r.index.meta["regime"] === "chaotic");
      const regular = runs.find((r) => r.index.meta["regime"] === "regular");
      if (!chaotic || !regular) {
        throw new Error("fig3 needs one chaotic and one regular index CSV");
      }
      rendered = renderFig3(chaotic, regular, { sharedScale: args.sharedScale });
    } else {
      const tables: Table[] = args.inputs.map(readTable);
      rendered = args.figure === "fig1" ? renderFig1(tables) : renderFig2(tables);
    }
    writeFileSync(args.out, rendered);
    return 0;
  } catch (err) {
    process.stderr.write(`plot: error: ${(err as Error).message}\n`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
