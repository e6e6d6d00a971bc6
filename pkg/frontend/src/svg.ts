/**
 * Minimal deterministic SVG scene builder: fixed canvas, linear scales,
 * polylines, rects, text.  Numbers are emitted with a fixed precision so a
 * given input always produces identical bytes.
 */

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { left: 64, right: 24, top: 36, bottom: 48 };

export function fmt(v: number): string {
  // fixed exponent-free formatting keeps output bytes stable across runs
  return Number(v.toFixed(3)).toString();
}

export interface Scale {
  (v: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 === 0 ? 1 : d1 - d0;
  const f = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  f.domain = domain;
  return f;
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) return [0, 1];
  if (lo === hi) return [lo - 1, hi + 1];
  return [lo, hi];
}

export class Svg {
  private parts: string[] = [];

  constructor(private width = WIDTH, private height = HEIGHT) {}

  polyline(points: [number, number][], stroke: string, opts: { dash?: string; width?: number } = {}): void {
    const pts = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    const dash = opts.dash ? ` stroke-dasharray="${opts.dash}"` : "";
    this.parts.push(
      `<polyline fill="none" stroke="${stroke}" stroke-width="${opts.width ?? 1.5}"${dash} points="${pts}"/>`,
    );
  }

  rect(x: number, y: number, w: number, h: number, fill: string): void {
    this.parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(w)}" height="${fmt(h)}" fill="${fill}"/>`,
    );
  }

  circle(cx: number, cy: number, r: number, fill: string, data: Record<string, string> = {}): void {
    const attrs = Object.entries(data)
      .map(([k, v]) => ` data-${k}="${v}"`)
      .join("");
    this.parts.push(`<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="${r}" fill="${fill}"${attrs}/>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, stroke: string, dash?: string): void {
    const d = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" stroke-width="1"${d}/>`,
    );
  }

  text(x: number, y: number, content: string, opts: { anchor?: string; size?: number } = {}): void {
    this.parts.push(
      `<text x="${fmt(x)}" y="${fmt(y)}" font-family="monospace" font-size="${opts.size ?? 12}" text-anchor="${opts.anchor ?? "start"}">${escapeXml(content)}</text>`,
    );
  }

  axes(xScale: Scale, yScale: Scale, xLabel: string, yLabel: string): void {
    const x0 = MARGIN.left;
    const x1 = this.width - MARGIN.right;
    const y0 = this.height - MARGIN.bottom;
    const y1 = MARGIN.top;
    this.line(x0, y0, x1, y0, "#000");
    this.line(x0, y0, x0, y1, "#000");
    for (const frac of [0, 0.25, 0.5, 0.75, 1]) {
      const xv = xScale.domain[0] + frac * (xScale.domain[1] - xScale.domain[0]);
      const yv = yScale.domain[0] + frac * (yScale.domain[1] - yScale.domain[0]);
      const xp = xScale(xv);
      const yp = yScale(yv);
      this.line(xp, y0, xp, y0 + 4, "#000");
      this.text(xp, y0 + 18, trim(xv), { anchor: "middle", size: 10 });
      this.line(x0 - 4, yp, x0, yp, "#000");
      this.text(x0 - 8, yp + 3, trim(yv), { anchor: "end", size: 10 });
    }
    this.text((x0 + x1) / 2, this.height - 12, xLabel, { anchor: "middle" });
    this.text(14, (y0 + y1) / 2, yLabel, { anchor: "middle" });
  }

  title(content: string): void {
    this.text(this.width / 2, 22, content, { anchor: "middle", size: 14 });
  }

  render(): string {
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">\n` +
      `<rect width="${this.width}" height="${this.height}" fill="#fff"/>\n` +
      this.parts.join("\n") +
      "\n</svg>\n"
    );
  }
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function trim(v: number): string {
  if (v !== 0 && (Math.abs(v) >= 1e4 || Math.abs(v) < 1e-3)) return v.toExponential(1);
  return Number(v.toPrecision(4)).toString();
}

/** Blue-white-red diverging color, v in [-1, 1]. */
export function diverging(v: number): string {
  const clamp = Math.max(-1, Math.min(1, v));
  const r = clamp > 0 ? 255 : Math.round(255 * (1 + clamp));
  const b = clamp < 0 ? 255 : Math.round(255 * (1 - clamp));
  const g = Math.round(255 * (1 - Math.abs(clamp)));
  return `rgb(${r},${g},${b})`;
}
