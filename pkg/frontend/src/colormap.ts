// Viridis, sampled at 16 anchors and linearly interpolated. Perceptually
// uniform, so equal steps in W^2 read as equal steps in color.

const ANCHORS: [number, number, number][] = [
  [68, 1, 84],
  [72, 26, 108],
  [71, 47, 125],
  [65, 68, 135],
  [57, 86, 140],
  [49, 104, 142],
  [42, 120, 142],
  [35, 136, 142],
  [31, 152, 139],
  [34, 168, 132],
  [53, 183, 121],
  [84, 197, 104],
  [122, 209, 81],
  [165, 219, 54],
  [210, 226, 27],
  [253, 231, 37],
];

function hex2(v: number): string {
  return v.toString(16).padStart(2, "0");
}

/** Map v in [0, 1] to a #rrggbb viridis color (clamped outside). */
export function viridis(v: number): string {
  const t = Math.min(1, Math.max(0, v)) * (ANCHORS.length - 1);
  const i = Math.min(ANCHORS.length - 2, Math.floor(t));
  const f = t - i;
  const rgb = ANCHORS[i].map((a, k) =>
    Math.round(a + f * (ANCHORS[i + 1][k] - a)),
  );
  return `#${hex2(rgb[0])}${hex2(rgb[1])}${hex2(rgb[2])}`;
}
