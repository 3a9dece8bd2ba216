/** Minimal SVG chart primitives: scales, axes, polylines, bars, legends. */

export const WIDTH = 760;
export const HEIGHT = 480;
export const MARGIN = { top: 40, right: 160, bottom: 56, left: 64 };

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

export interface Scale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  return scale;
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 1, hi + 1];
  return [lo, hi];
}

export function padded([lo, hi]: [number, number], fraction = 0.05): [number, number] {
  const pad = (hi - lo) * fraction;
  return [lo - pad, hi + pad];
}

export function ticks([lo, hi]: [number, number], count = 6): number[] {
  const rawStep = (hi - lo) / Math.max(count, 1);
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 2.5, 5, 10].map((k) => k * power);
  const step = candidates.find((c) => c >= rawStep) ?? rawStep;
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    out.push(Number(v.toPrecision(12)));
  }
  return out;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatTick(value: number): string {
  return Math.abs(value) >= 1000 ? value.toFixed(0) : String(Number(value.toPrecision(4)));
}

export class SvgBuilder {
  private parts: string[] = [];

  constructor(readonly width = WIDTH, readonly height = HEIGHT) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">`,
      `<rect width="${width}" height="${height}" fill="white"/>`,
    );
  }

  raw(fragment: string): void {
    this.parts.push(fragment);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke = "#333", width = 1): void {
    this.parts.push(
      `<line x1="${x1.toFixed(2)}" y1="${y1.toFixed(2)}" x2="${x2.toFixed(2)}" ` +
        `y2="${y2.toFixed(2)}" stroke="${stroke}" stroke-width="${width}"/>`,
    );
  }

  polyline(points: Array<[number, number]>, stroke: string, dash?: string): void {
    const attr = points.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
    const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<polyline points="${attr}" fill="none" stroke="${stroke}" stroke-width="2"${dashAttr}/>`,
    );
  }

  rect(x: number, y: number, w: number, h: number, fill: string, opacity = 1): void {
    this.parts.push(
      `<rect x="${x.toFixed(2)}" y="${y.toFixed(2)}" width="${w.toFixed(2)}" ` +
        `height="${h.toFixed(2)}" fill="${fill}" fill-opacity="${opacity}"/>`,
    );
  }

  circle(x: number, y: number, r: number, fill: string): void {
    this.parts.push(
      `<circle cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="${r}" fill="${fill}"/>`,
    );
  }

  text(x: number, y: number, content: string, options: {
    anchor?: "start" | "middle" | "end";
    size?: number;
    rotate?: number;
    bold?: boolean;
  } = {}): void {
    const { anchor = "start", size = 12, rotate, bold = false } = options;
    const transform = rotate !== undefined
      ? ` transform="rotate(${rotate} ${x.toFixed(2)} ${y.toFixed(2)})"`
      : "";
    const weight = bold ? ` font-weight="bold"` : "";
    this.parts.push(
      `<text x="${x.toFixed(2)}" y="${y.toFixed(2)}" text-anchor="${anchor}" ` +
        `font-size="${size}"${weight}${transform}>${escapeXml(content)}</text>`,
    );
  }

  axes(xScale: Scale, yScale: Scale, xLabel: string, yLabel: string): void {
    const x0 = MARGIN.left;
    const x1 = this.width - MARGIN.right;
    const y0 = this.height - MARGIN.bottom;
    const y1 = MARGIN.top;
    this.line(x0, y0, x1, y0);
    this.line(x0, y0, x0, y1);
    for (const t of ticks(xScale.domain)) {
      const px = xScale(t);
      this.line(px, y0, px, y0 + 5);
      this.text(px, y0 + 18, formatTick(t), { anchor: "middle" });
    }
    for (const t of ticks(yScale.domain)) {
      const py = yScale(t);
      this.line(x0 - 5, py, x0, py);
      this.line(x0, py, x1, py, "#eee");
      this.text(x0 - 8, py + 4, formatTick(t), { anchor: "end" });
    }
    this.text((x0 + x1) / 2, this.height - 14, xLabel, { anchor: "middle" });
    this.text(18, (y0 + y1) / 2, yLabel, { anchor: "middle", rotate: -90 });
  }

  legend(entries: Array<{ label: string; color: string; dash?: string }>): void {
    const x = this.width - MARGIN.right + 12;
    entries.forEach((entry, index) => {
      const y = MARGIN.top + 8 + index * 18;
      this.polyline(
        [
          [x, y],
          [x + 22, y],
        ],
        entry.color,
        entry.dash,
      );
      this.text(x + 28, y + 4, entry.label, { size: 11 });
    });
  }

  title(content: string): void {
    this.text(this.width / 2, 22, content, { anchor: "middle", size: 15, bold: true });
  }

  toString(): string {
    return this.parts.join("\n") + "\n</svg>\n";
  }
}
