import { Table, column } from "./csv.js";
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
    if (!out[want]) throw new Error(`need a ${want} echo CSV`);
  }
  return out;
}

/**
 * Purity-fidelity decay (main panel) with the linear-response prediction
 * dashed on top, plus a |F|^4 inset on its own vertical scale -- the two
 * panels deliberately do not share an axis.
 */
export function renderFig2(tables: Table[]): string {
  const regimes = byRegime(tables);
  const svg = new Svg(640, 440);
  const tAll = column(regimes["chaotic"], "t");
  const tmax = tAll[tAll.length - 1];

  let fpMin = 1;
  for (const tab of Object.values(regimes)) {
    fpMin = Math.min(fpMin, ...column(tab, "FP"));
  }
  const main = frame(
    svg,
    { left: 60, top: 30, width: 540, height: 350 },
    [0, tmax],
    [Math.max(0, fpMin - 0.05 * (1 - fpMin)), 1],
    { x: "t", y: "F_P" },
  );
  for (const [regime, tab] of Object.entries(regimes)) {
    const t = column(tab, "t");
    svg.polyline(
      t.map(main.x),
      column(tab, "FP").map(main.y),
      `stroke="${COLORS[regime]}" stroke-width="1.5"`,
    );
    svg.polyline(
      t.map(main.x),
      column(tab, "FP_pred").map(main.y),
      `stroke="${COLORS[regime]}" stroke-width="1" stroke-dasharray="4 3"`,
    );
  }

  // |F|^4 inset, bottom-left so it avoids the decaying curves
  let f4Min = 1;
  for (const tab of Object.values(regimes)) {
    f4Min = Math.min(f4Min, ...column(tab, "F4"));
  }
  const inset = frame(
    svg,
    { left: 110, top: 220, width: 200, height: 130 },
    [0, tmax],
    [Math.max(0, f4Min - 0.05 * (1 - f4Min)), 1],
    { title: "|F|⁴" },
  );
  svg.rect(110, 220, 200, 130, 'fill="white" fill-opacity="0" stroke="none"');
  for (const [regime, tab] of Object.entries(regimes)) {
    svg.polyline(
      column(tab, "t").map(inset.x),
      column(tab, "F4").map(inset.y),
      `stroke="${COLORS[regime]}" stroke-width="1.2"`,
    );
  }
  svg.text(480, 50, "chaotic", `font-size="12" fill="${COLORS.chaotic}"`);
  svg.text(480, 66, "regular", `font-size="12" fill="${COLORS.regular}"`);
  svg.text(480, 82, "dashed: linear response", 'font-size="12" fill="black"');
  return svg.toString();
}
