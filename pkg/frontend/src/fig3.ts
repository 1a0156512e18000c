import { Table, column } from "./csv.js";
import { viridis } from "./colormap.js";
import { Svg, frame, fmt } from "./svg.js";

const COLORS: Record<string, string> = { chaotic: "#d62728", regular: "#1f77b4" };

export interface WignerRun {
  index: Table;
  snapshots: Table[]; // one per index row, same order
}

export interface Fig3Options {
  /** false (default): each snapshot normalized to its own max. */
  sharedScale?: boolean;
}

function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function drawHeatmap(
  svg: Svg,
  tab: Table,
  box: { left: number; top: number; width: number; height: number },
  norm: number,
): void {
  const thetas = uniqueSorted(column(tab, "theta"));
  const phis = uniqueSorted(column(tab, "phi"));
  const th = column(tab, "theta");
  const ph = column(tab, "phi");
  const w2 = column(tab, "W2");
  const cw = box.width / phis.length;
  const ch = box.height / thetas.length;
  for (let k = 0; k < w2.length; k++) {
    const i = thetas.indexOf(th[k]);
    const j = phis.indexOf(ph[k]);
    svg.rect(
      box.left + j * cw,
      box.top + i * ch,
      cw + 0.01,
      ch + 0.01,
      `fill="${viridis(norm > 0 ? w2[k] / norm : 0)}" stroke="none"`,
    );
  }
  svg.rect(
    box.left,
    box.top,
    box.width,
    box.height,
    'fill="none" stroke="black" stroke-width="0.8"',
  );
}

function snapshotMax(tab: Table): number {
  return Math.max(...column(tab, "W2"));
}

/**
 * Snapshot montage: a strip of W^2 heatmaps (theta down, phi across) for the
 * chaotic run on top and the regular run below, with the purity curve of
 * both runs in a shared frame between them. Snapshot columns line up with
 * their times on the central axis.
 */
export function renderFig3(
  chaotic: WignerRun,
  regular: WignerRun,
  options: Fig3Options = {},
): string {
  for (const [name, run] of [
    ["chaotic", chaotic],
    ["regular", regular],
  ] as const) {
    if (run.snapshots.length !== run.index.rows.length) {
      throw new Error(
        `${name}: ${run.snapshots.length} snapshots for ` +
          `${run.index.rows.length} index rows`,
      );
    }
    if (run.snapshots.length === 0) throw new Error(`${name}: no snapshots`);
  }
  const panel = 90;
  const gap = 14;
  const n = chaotic.snapshots.length;
  const width = 70 + n * (panel + gap);
  const svg = new Svg(width, 3 * panel + 160);

  const sharedNorm = options.sharedScale
    ? Math.max(
        ...chaotic.snapshots.map(snapshotMax),
        ...regular.snapshots.map(snapshotMax),
      )
    : 0;

  const strips: [WignerRun, number][] = [
    [chaotic, 30],
    [regular, 2 * panel + 110],
  ];
  for (const [run, top] of strips) {
    run.snapshots.forEach((snap, k) => {
      drawHeatmap(
        svg,
        snap,
        { left: 60 + k * (panel + gap), top, width: panel, height: panel },
        options.sharedScale ? sharedNorm : snapshotMax(snap),
      );
    });
  }

  // purity frame centered between the strips, sharing the snapshot axis
  const tCha = column(chaotic.index, "t");
  const tmax = tCha[tCha.length - 1];
  const f = frame(
    svg,
    { left: 60, top: panel + 52, width: n * (panel + gap) - gap, height: panel - 14 },
    [0, tmax],
    [0, 1.05],
    { x: "t", y: "F_P" },
  );
  for (const [regime, run] of [
    ["chaotic", chaotic],
    ["regular", regular],
  ] as const) {
    const t = column(run.index, "t");
    const p = column(run.index, "purity_direct");
    svg.polyline(t.map(f.x), p.map(f.y), `stroke="${COLORS[regime]}" stroke-width="1.5"`);
    t.forEach((ti, k) => {
      svg.raw(
        `<circle cx="${fmt(f.x(ti))}" cy="${fmt(f.y(p[k]))}" r="2.5" ` +
          `fill="${COLORS[regime]}"/>`,
      );
    });
  }
  svg.text(10, 30 + panel / 2, "chaotic", 'font-size="12"');
  svg.text(10, 2 * panel + 110 + panel / 2, "regular", 'font-size="12"');
  return svg.toString();
}
