/**
 * The five figure kinds, each a pure function from parsed data to an SVG
 * string: profile curve, evolution waterfall surface, evolution contour,
 * phase-plane portrait, and the stability response curve.
 */

import {
  HEIGHT,
  MARGIN,
  Svg,
  WIDTH,
  diverging,
  extent,
  linearScale,
} from "./svg.js";
import type {
  PhasePlaneData,
  ProfileData,
  SnapshotData,
  StabilityData,
} from "./parse.js";

const PLOT_X: [number, number] = [MARGIN.left, WIDTH - MARGIN.right];
const PLOT_Y: [number, number] = [HEIGHT - MARGIN.bottom, MARGIN.top];

export function renderProfile(data: ProfileData): string {
  const svg = new Svg();
  const xScale = linearScale(extent(data.x), PLOT_X);
  const [phiLo, phiHi] = extent(data.phi.concat([0]));
  const yScale = linearScale([phiLo, phiHi * 1.05], PLOT_Y);
  svg.axes(xScale, yScale, "x", "phi");
  svg.title("stationary profile");
  svg.polyline(
    data.x.map((x, i) => [xScale(x), yScale(data.phi[i])] as [number, number]),
    "#1f4e9e",
    { width: 2 },
  );
  // mark the maximum; the data attributes carry the exact CSV values
  let imax = 0;
  for (let i = 1; i < data.phi.length; i++) if (data.phi[i] > data.phi[imax]) imax = i;
  svg.circle(xScale(data.x[imax]), yScale(data.phi[imax]), 4, "#c03020", {
    "peak-x": String(data.x[imax]),
    "peak-phi": String(data.phi[imax]),
  });
  return svg.render();
}

export function renderEvolutionSurface(data: SnapshotData): string {
  // waterfall: one polyline of Re u per snapshot, offset upward with t
  const svg = new Svg();
  svg.title("Re u(x, t) - waterfall surface");
  const nT = data.times.length;
  const [reLo, reHi] = extent(data.reU.flat());
  const laneGap = (PLOT_Y[0] - PLOT_Y[1]) / Math.max(1, nT);
  const amp = Math.max(Math.abs(reLo), Math.abs(reHi), 1e-30);
  const xScale = linearScale(extent(data.x), PLOT_X);
  for (let i = nT - 1; i >= 0; i--) {
    const base = PLOT_Y[0] - (i + 0.5) * laneGap;
    const pts = data.x.map(
      (x, j) =>
        [xScale(x), base - (data.reU[i][j] / amp) * laneGap * 1.6] as [number, number],
    );
    svg.polyline(pts, i === 0 ? "#c03020" : "#1f4e9e", { width: 1 });
    svg.text(PLOT_X[1] + 2, base + 3, `t=${Number(data.times[i].toPrecision(3))}`, { size: 8 });
  }
  svg.text(WIDTH / 2, HEIGHT - 12, "x", { anchor: "middle" });
  return svg.render();
}

export function renderEvolutionContour(data: SnapshotData): string {
  const svg = new Svg();
  svg.title("Re u(x, t) - contour");
  const xScale = linearScale(extent(data.x), PLOT_X);
  const tScale = linearScale(extent(data.times), PLOT_Y);
  const amp = Math.max(...data.reU.flat().map(Math.abs), 1e-30);
  // cap the raster at ~200 columns to keep files small and deterministic
  const stride = Math.max(1, Math.floor(data.x.length / 200));
  for (let i = 0; i < data.times.length; i++) {
    const y1 = tScale(data.times[i]);
    const y0 = i + 1 < data.times.length ? tScale(data.times[i + 1]) : PLOT_Y[1];
    const h = Math.abs(y1 - y0);
    for (let j = 0; j < data.x.length; j += stride) {
      const x0 = xScale(data.x[j]);
      const x1 = xScale(data.x[Math.min(j + stride, data.x.length - 1)]);
      svg.rect(x0, Math.min(y0, y1), Math.max(x1 - x0, 0.1), h, diverging(data.reU[i][j] / amp));
    }
  }
  const axX = linearScale(extent(data.x), PLOT_X);
  const axT = linearScale(extent(data.times), PLOT_Y);
  svg.axes(axX, axT, "x", "t");
  return svg.render();
}

export function renderPhasePlane(data: PhasePlaneData): string {
  const svg = new Svg();
  svg.title("phase-plane path (phi, phi')");
  const all = data.unstable.concat(data.jump, data.stable);
  const xScale = linearScale(extent(all.map((p) => p[0])), PLOT_X);
  const yScale = linearScale(extent(all.map((p) => p[1])), PLOT_Y);
  svg.axes(xScale, yScale, "phi", "dphi");
  const toPx = (pts: [number, number][]) =>
    pts.map(([a, b]) => [xScale(a), yScale(b)] as [number, number]);
  svg.polyline(toPx(data.unstable), "#1f4e9e", { width: 2 });
  svg.polyline(toPx(data.stable), "#2a8a3c", { width: 2 });
  svg.polyline(toPx(data.jump), "#c03020", { width: 2, dash: "6,4" });
  for (const [a, b] of data.jump) {
    svg.circle(xScale(a), yScale(b), 3, "#c03020");
  }
  return svg.render();
}

export function renderStabilityCurve(data: StabilityData): string {
  const svg = new Svg();
  svg.title("perturbation response");
  const logEps = data.eps.map((e) => Math.log10(Math.max(e, 1e-300)));
  const logDist = data.dist.map((d) => Math.log10(Math.max(d, 1e-300)));
  const xScale = linearScale(extent(logEps), PLOT_X);
  const yScale = linearScale(extent(logDist), PLOT_Y);
  svg.axes(xScale, yScale, "log10 eps", "log10 max dist");
  // one polyline per perturbation kind, in first-appearance order
  const kinds = [...new Set(data.kind)];
  const colors = ["#1f4e9e", "#2a8a3c", "#c03020"];
  kinds.forEach((kind, k) => {
    const pts: [number, number][] = [];
    data.kind.forEach((ki, i) => {
      if (ki === kind) pts.push([xScale(logEps[i]), yScale(logDist[i])]);
    });
    svg.polyline(pts, colors[k % colors.length], { width: 2 });
    for (const [x, y] of pts) svg.circle(x, y, 3, colors[k % colors.length]);
  });
  return svg.render();
}
