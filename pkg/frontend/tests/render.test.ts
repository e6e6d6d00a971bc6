import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { KINDS, main, renderToSvg, type Kind } from "../src/cli.js";
import { readProfile } from "../src/parse.js";

const FIX = join(dirname(fileURLToPath(import.meta.url)), "fixtures");
const INPUT: Record<Kind, string> = {
  profile: join(FIX, "profile", "profile.csv"),
  "evolution-surface": join(FIX, "evolution", "snapshots.csv"),
  "evolution-contour": join(FIX, "evolution", "snapshots.csv"),
  phaseplane: join(FIX, "phaseplane", "phaseplane.csv"),
  "stability-curve": join(FIX, "stability", "stability_curve.csv"),
};

describe("all five figure kinds render", () => {
  for (const kind of KINDS) {
    it(`renders ${kind}`, () => {
      const svg = renderToSvg(kind, [INPUT[kind]]);
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg).toContain("</svg>");
      expect(svg.length).toBeGreaterThan(500);
    });
  }
});

describe("profile figure peak", () => {
  it("marks the maximum at x=0 with the CSV's phi(0)", () => {
    const svg = renderToSvg("profile", [INPUT.profile]);
    const marker = svg.match(/data-peak-x="([^"]+)" data-peak-phi="([^"]+)"/);
    expect(marker).not.toBeNull();
    const peakX = Number(marker![1]);
    const peakPhi = Number(marker![2]);
    expect(peakX).toBe(0);
    const data = readProfile(INPUT.profile);
    const i0 = data.x.findIndex((x) => x === 0);
    expect(i0).toBeGreaterThanOrEqual(0);
    expect(peakPhi).toBe(data.phi[i0]);
    expect(peakPhi).toBe(Math.max(...data.phi));
  });
});

describe("determinism", () => {
  it("same input gives identical bytes", () => {
    const a = renderToSvg("phaseplane", [INPUT.phaseplane]);
    const b = renderToSvg("phaseplane", [INPUT.phaseplane]);
    expect(a).toBe(b);
  });
});

describe("cli entry", () => {
  it("writes the output file and exits 0", () => {
    const dir = mkdtempSync(join(tmpdir(), "nlsdp-plots-"));
    const out = join(dir, "profile.svg");
    const code = main(["--kind", "profile", "--in", INPUT.profile, "--out", out]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("<svg");
  });

  it("missing input file exits 1", () => {
    const dir = mkdtempSync(join(tmpdir(), "nlsdp-plots-"));
    const code = main([
      "--kind",
      "profile",
      "--in",
      join(dir, "nope.csv"),
      "--out",
      join(dir, "x.svg"),
    ]);
    expect(code).toBe(1);
  });

  it("malformed input exits 1", () => {
    const dir = mkdtempSync(join(tmpdir(), "nlsdp-plots-"));
    const bad = join(dir, "bad.csv");
    writeFileSync(bad, "x,phi,dphi\n1,not-a-number,3\n");
    const code = main(["--kind", "profile", "--in", bad, "--out", join(dir, "x.svg")]);
    expect(code).toBe(1);
  });

  it("unknown kind exits 64", () => {
    const code = main(["--kind", "pie-chart", "--in", INPUT.profile, "--out", "/tmp/x.svg"]);
    expect(code).toBe(64);
  });

  it("missing required flags exits 64", () => {
    const code = main(["--kind", "profile"]);
    expect(code).toBe(64);
  });
});

describe("branch structure", () => {
  it("phase-plane figure contains a dashed jump segment", () => {
    const svg = renderToSvg("phaseplane", [INPUT.phaseplane]);
    expect(svg).toContain("stroke-dasharray");
  });

  it("stability curve renders one marker per report row", () => {
    const svg = renderToSvg("stability-curve", [INPUT["stability-curve"]]);
    const circles = svg.match(/<circle/g) ?? [];
    expect(circles.length).toBe(3);
  });
});
