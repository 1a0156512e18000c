import { Table, column, metaNumber } from "./csv.js";
import { Svg, frame } from "./svg.js";

const COLORS: Record<string, string> = { chaotic: "#d62728", regular: "#1f77b4" };

function byRegime(tables: Table[]): Record<string, Table> {
  const out: Record<string, Table> = {};
  for (const t of tables) {
    const regime = t.meta["regime"];
    if (!regime) throw new Error("input CSV lacks a 'regime' metadata key");
    out[regime] = t;
  }
  for (const want of ["chaotic", "regular"]) {
    if (!out[want]) throw new Error(`need a ${want} correlations CSV`);
  }
  return out;
}

/**
 * Correlation growth rates: C(t)/t and D(t)/t for both regimes, with a
 * dashed horizontal guide at 2*sigma (chaotic diffusion) and a dashed line
 * of slope cbar (regular ballistic growth). Guide values come from the CSV
 * metadata written by the fit, never from constants here.
 */
export function renderFig1(tables: Table[]): string {
  const regimes = byRegime(tables);
  const svg = new Svg(640, 440);
  const series: { xs: number[]; ys: number[]; color: string; dash: string }[] = [];
  let ymax = 0;
  let tmax = 0;
  for (const [regime, tab] of Object.entries(regimes)) {
    const t = column(tab, "t");
    tmax = Math.max(tmax, t[t.length - 1]);
    for (const [col, dash] of [
      ["C_over_t", ""],
      ["D_over_t", "stroke-dasharray=\"2 3\""],
    ] as const) {
      const ys = column(tab, col);
      ymax = Math.max(ymax, ...ys);
      series.push({ xs: t, ys, color: COLORS[regime], dash });
    }
  }
  const twoSigma = 2 * metaNumber(regimes["chaotic"], "sigma");
  const cbar = metaNumber(regimes["regular"], "cbar");
  ymax = Math.max(ymax, twoSigma) * 1.05;

  const f = frame(
    svg,
    { left: 60, top: 30, width: 540, height: 350 },
    [0, tmax],
    [0, ymax],
    { x: "t", y: "C/t, D/t" },
  );
  // guides first so the data curves draw on top
  svg.line(
    f.x(0),
    f.y(twoSigma),
    f.x(tmax),
    f.y(twoSigma),
    'stroke="black" stroke-dasharray="6 4"',
  );
  const tCap = Math.min(tmax, ymax / cbar); // keep the slope guide in frame
  svg.line(
    f.x(0),
    f.y(0),
    f.x(tCap),
    f.y(cbar * tCap),
    'stroke="black" stroke-dasharray="6 4"',
  );
  for (const s of series) {
    svg.polyline(
      s.xs.map(f.x),
      s.ys.map(f.y),
      `stroke="${s.color}" stroke-width="1.5" ${s.dash}`,
    );
  }
  svg.text(70, 46, "chaotic", `font-size="12" fill="${COLORS.chaotic}"`);
  svg.text(70, 62, "regular", `font-size="12" fill="${COLORS.regular}"`);
  svg.text(70, 78, "dashed: D/t; guides: 2σ and slope c̄", 'font-size="12" fill="black"');
  return svg.toString();
}
