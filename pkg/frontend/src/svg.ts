// Minimal hand-rolled SVG plotting. No DOM, no timestamps, no randomness:
// identical inputs produce byte-identical files.

export interface Scale {
  (x: number): number;
  domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const f = ((x: number) => r0 + ((x - d0) / (d1 - d0)) * (r1 - r0)) as Scale;
  f.domain = domain;
  return f;
}

/** Round-number ticks covering [min, max], roughly n of them. */
export function ticks(min: number, max: number, n: number): number[] {
  const span = max - min;
  if (span <= 0) return [min];
  const rawStep = span / n;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= rawStep) {
      step = m * mag;
      break;
    }
  }
  const out: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + 1e-9 * span; v += step) {
    out.push(Math.abs(v) < 1e-12 * span ? 0 : v);
  }
  return out;
}

/** Fixed-precision coordinate formatting keeps the output stable. */
export function fmt(x: number): string {
  const s = x.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function fmtTick(x: number): string {
  if (x === 0) return "0";
  const s = x.toPrecision(3);
  return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
}

export class Svg {
  private parts: string[] = [];

  constructor(
    readonly width: number,
    readonly height: number,
  ) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
        `height="${height}" viewBox="0 0 ${width} ${height}" ` +
        `font-family="sans-serif">`,
    );
    this.parts.push(
      `<rect width="${width}" height="${height}" fill="white"/>`,
    );
  }

  raw(el: string): void {
    this.parts.push(el);
  }

  line(x1: number, y1: number, x2: number, y2: number, attrs: string): void {
    this.raw(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" ` +
        `y2="${fmt(y2)}" ${attrs}/>`,
    );
  }

  polyline(xs: number[], ys: number[], attrs: string): void {
    const pts = xs.map((x, i) => `${fmt(x)},${fmt(ys[i])}`).join(" ");
    this.raw(`<polyline points="${pts}" fill="none" ${attrs}/>`);
  }

  rect(x: number, y: number, w: number, h: number, attrs: string): void {
    this.raw(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" ` +
        `height="${fmt(h)}" ${attrs}/>`,
    );
  }

  text(x: number, y: number, s: string, attrs: string): void {
    this.raw(`<text x="${fmt(x)}" y="${fmt(y)}" ${attrs}>${s}</text>`);
  }

  toString(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}

export interface Frame {
  x: Scale;
  y: Scale;
}

/** Axes box with ticks and labels; returns the data->pixel scales. */
export function frame(
  svg: Svg,
  box: { left: number; top: number; width: number; height: number },
  xdom: [number, number],
  ydom: [number, number],
  labels: { x?: string; y?: string; title?: string },
): Frame {
  const x = linearScale(xdom, [box.left, box.left + box.width]);
  const y = linearScale(ydom, [box.top + box.height, box.top]);
  svg.rect(
    box.left,
    box.top,
    box.width,
    box.height,
    'fill="none" stroke="black" stroke-width="1"',
  );
  const axisText = 'font-size="11" fill="black"';
  for (const t of ticks(xdom[0], xdom[1], 6)) {
    const px = x(t);
    svg.line(px, box.top + box.height, px, box.top + box.height + 4, 'stroke="black"');
    svg.text(
      px,
      box.top + box.height + 16,
      fmtTick(t),
      `${axisText} text-anchor="middle"`,
    );
  }
  for (const t of ticks(ydom[0], ydom[1], 5)) {
    const py = y(t);
    svg.line(box.left - 4, py, box.left, py, 'stroke="black"');
    svg.text(box.left - 7, py + 4, fmtTick(t), `${axisText} text-anchor="end"`);
  }
  if (labels.x) {
    svg.text(
      box.left + box.width / 2,
      box.top + box.height + 32,
      labels.x,
      'font-size="13" text-anchor="middle"',
    );
  }
  if (labels.y) {
    const cx = box.left - 36;
    const cy = box.top + box.height / 2;
    svg.text(
      cx,
      cy,
      labels.y,
      `font-size="13" text-anchor="middle" transform="rotate(-90 ${fmt(cx)} ${fmt(cy)})"`,
    );
  }
  if (labels.title) {
    svg.text(
      box.left + box.width / 2,
      box.top - 8,
      labels.title,
      'font-size="13" text-anchor="middle"',
    );
  }
  return { x, y };
}
