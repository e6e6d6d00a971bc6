/**
 * Readers for the simulator CLI's documented CSV formats.
 *
 * Every file carries `#`-prefixed comment headers followed by a named-column
 * CSV body; parsing is strict — unknown shapes raise instead of degrading.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export class InputError extends Error {}

function parseCsv(path: string): Record<string, string>[] {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch {
    throw new InputError(`cannot read input file: ${path}`);
  }
  const result = Papa.parse<Record<string, string>>(text, {
    header: true,
    comments: "#",
    skipEmptyLines: true,
  });
  if (result.errors.length > 0) {
    const first = result.errors[0];
    throw new InputError(`malformed CSV in ${path}: ${first.message} (row ${first.row})`);
  }
  if (result.data.length === 0) {
    throw new InputError(`no data rows in ${path}`);
  }
  return result.data;
}

function numericColumn(rows: Record<string, string>[], name: string, path: string): number[] {
  if (!(name in rows[0])) {
    throw new InputError(`missing column '${name}' in ${path}`);
  }
  return rows.map((r, i) => {
    const v = Number(r[name]);
    if (!Number.isFinite(v)) {
      throw new InputError(`non-numeric value '${r[name]}' in column '${name}' of ${path} (row ${i})`);
    }
    return v;
  });
}

export interface ProfileData {
  x: number[];
  phi: number[];
  dphi: number[];
}

export function readProfile(path: string): ProfileData {
  const rows = parseCsv(path);
  return {
    x: numericColumn(rows, "x", path),
    phi: numericColumn(rows, "phi", path),
    dphi: numericColumn(rows, "dphi", path),
  };
}

export interface SnapshotData {
  /** distinct times, ascending */
  times: number[];
  /** spatial nodes, ascending (identical for every time) */
  x: number[];
  /** reU[i][j] = Re u(x[j], times[i]) */
  reU: number[][];
}

export function readSnapshots(path: string): SnapshotData {
  const rows = parseCsv(path);
  const t = numericColumn(rows, "t", path);
  const x = numericColumn(rows, "x", path);
  const re = numericColumn(rows, "re_u", path);
  const times: number[] = [];
  const reU: number[][] = [];
  let xs: number[] = [];
  let firstXs: number[] | null = null;
  let current = Number.NaN;
  let slice: number[] = [];
  const flush = () => {
    if (slice.length > 0) {
      times.push(current);
      reU.push(slice);
      if (firstXs === null) {
        firstXs = xs;
      } else if (xs.length !== firstXs.length) {
        throw new InputError(`ragged snapshot grid in ${path}`);
      }
    }
  };
  for (let i = 0; i < rows.length; i++) {
    if (t[i] !== current) {
      flush();
      current = t[i];
      slice = [];
      xs = [];
    }
    slice.push(re[i]);
    xs.push(x[i]);
  }
  flush();
  if (firstXs === null) {
    throw new InputError(`no snapshots in ${path}`);
  }
  return { times, x: firstXs, reU };
}

export interface PhasePlaneData {
  unstable: [number, number][];
  jump: [number, number][];
  stable: [number, number][];
}

export function readPhasePlane(path: string): PhasePlaneData {
  const rows = parseCsv(path);
  const phi = numericColumn(rows, "phi", path);
  const dphi = numericColumn(rows, "dphi", path);
  const out: PhasePlaneData = { unstable: [], jump: [], stable: [] };
  rows.forEach((r, i) => {
    const branch = r["branch"];
    if (branch !== "unstable" && branch !== "jump" && branch !== "stable") {
      throw new InputError(`unknown branch '${branch}' in ${path} (row ${i})`);
    }
    out[branch].push([phi[i], dphi[i]]);
  });
  if (out.unstable.length === 0 || out.jump.length !== 2 || out.stable.length === 0) {
    throw new InputError(`incomplete phase-plane branches in ${path}`);
  }
  return out;
}

export interface StabilityData {
  eps: number[];
  dist: number[];
  kind: string[];
}

export function readStabilityCurve(path: string): StabilityData {
  const rows = parseCsv(path);
  return {
    eps: numericColumn(rows, "eps", path),
    dist: numericColumn(rows, "max_orbital_dist", path),
    kind: rows.map((r) => r["kind"] ?? ""),
  };
}
