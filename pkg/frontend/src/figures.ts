import { writeFileSync } from "node:fs";

import { CsvTable, column, readCsv, requireColumns } from "./csv.js";
import { Scale, extent, formatTick, linearScale, ticks } from "./scale.js";

export type FigureKind = "distribution-panels" | "detuning-sweep" | "gamma-inset";

export interface FigureSpec {
  csvPath: string;
  kind: FigureKind;
  outPath: string;
  /** Axis labels, units included; defaults are per figure kind. */
  xLabel?: string;
  yLabel?: string;
}

export interface SeriesMeta {
  label: string;
  pointCount: number;
}

export interface ZeroCrossing {
  series: string;
  x: number;
}

export interface FigureResult {
  kind: FigureKind;
  width: number;
  height: number;
  series: SeriesMeta[];
  zeroCrossings: ZeroCrossing[];
  svg: string;
}

export const DISTRIBUTION_COLUMNS = ["time_ps", "time_rabi_cycles", "m", "p_m"];
export const DETUNING_COLUMNS = [
  "delta_ps_inv",
  "flux_ps_inv",
  "energy_rate_W",
  "temperature_K",
  "rwa_ratio",
  "unique",
];
export const GAMMA_COLUMNS = ["gamma_ps_inv", "flux_ps_inv"];

const WIDTH = 760;
const HEIGHT = 420;
const MARGIN = { left: 68, right: 72, top: 28, bottom: 52 };
const PALETTE = ["#c0392b", "#27ae60", "#2980b9", "#7f8c8d", "#8e44ad", "#d35400"];

const fmt = (value: number): string => value.toFixed(2);

/** Interpolated sign changes of y along x; exact zeros count once. */
export function zeroCrossings(x: number[], y: number[]): number[] {
  const out: number[] = [];
  for (let i = 0; i < y.length - 1; i++) {
    if (y[i] === 0) {
      out.push(x[i]);
    } else if (y[i] * y[i + 1] < 0) {
      out.push(x[i] + (x[i + 1] - x[i]) * (y[i] / (y[i] - y[i + 1])));
    }
  }
  if (y.length > 0 && y[y.length - 1] === 0) {
    out.push(x[x.length - 1]);
  }
  return out;
}

function svgOpen(): string[] {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
  ];
}

function xAxis(parts: string[], scale: Scale, label: string, tickValues: number[]): void {
  const y0 = HEIGHT - MARGIN.bottom;
  parts.push(`<g class="x-axis" stroke="black">`);
  parts.push(`<line x1="${MARGIN.left}" y1="${y0}" x2="${WIDTH - MARGIN.right}" y2="${y0}"/>`);
  for (const t of tickValues) {
    const x = fmt(scale(t));
    parts.push(`<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 5}"/>`);
    parts.push(
      `<text x="${x}" y="${y0 + 18}" stroke="none" text-anchor="middle">${formatTick(t)}</text>`
    );
  }
  parts.push(`</g>`);
  parts.push(
    `<text class="x-label" x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" ` +
      `y="${HEIGHT - 10}" text-anchor="middle">${label}</text>`
  );
}

function yAxis(
  parts: string[],
  scale: Scale,
  label: string,
  tickValues: number[],
  side: "left" | "right" = "left",
  color = "black"
): void {
  const x0 = side === "left" ? MARGIN.left : WIDTH - MARGIN.right;
  const direction = side === "left" ? -1 : 1;
  parts.push(`<g class="y-axis y-axis-${side}" stroke="${color}">`);
  parts.push(`<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${HEIGHT - MARGIN.bottom}"/>`);
  for (const t of tickValues) {
    const y = fmt(scale(t));
    parts.push(`<line x1="${x0}" y1="${y}" x2="${x0 + 5 * direction}" y2="${y}"/>`);
    const anchor = side === "left" ? "end" : "start";
    parts.push(
      `<text x="${x0 + 8 * direction}" y="${y}" stroke="none" fill="${color}" ` +
        `dominant-baseline="middle" text-anchor="${anchor}">${formatTick(t)}</text>`
    );
  }
  parts.push(`</g>`);
  const labelX = side === "left" ? 16 : WIDTH - 12;
  const mid = (MARGIN.top + HEIGHT - MARGIN.bottom) / 2;
  parts.push(
    `<text class="y-label" x="${labelX}" y="${mid}" fill="${color}" text-anchor="middle" ` +
      `transform="rotate(-90 ${labelX} ${mid})">${label}</text>`
  );
}

function seriesPath(
  parts: string[],
  xs: number[],
  ys: number[],
  xScale: Scale,
  yScale: Scale,
  label: string,
  color: string,
  dash = ""
): void {
  const points = xs.map((x, i) => `${fmt(xScale(x))},${fmt(yScale(ys[i]))}`).join(" ");
  const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
  parts.push(`<g class="series" data-label="${label}">`);
  parts.push(`<polyline fill="none" stroke="${color}"${dashAttr} points="${points}"/>`);
  for (let i = 0; i < xs.length; i++) {
    parts.push(
      `<circle class="pt" cx="${fmt(xScale(xs[i]))}" cy="${fmt(yScale(ys[i]))}" r="2.4" ` +
        `fill="${color}"/>`
    );
  }
  parts.push(`</g>`);
}

function legend(parts: string[], labels: string[], colors: string[]): void {
  parts.push(`<g class="legend">`);
  labels.forEach((label, i) => {
    const y = MARGIN.top + 16 * i;
    parts.push(
      `<rect x="${MARGIN.left + 10}" y="${y}" width="10" height="10" fill="${colors[i]}"/>`
    );
    parts.push(`<text x="${MARGIN.left + 26}" y="${y + 9}">${label}</text>`);
  });
  parts.push(`</g>`);
}

export function buildDistributionFigure(table: CsvTable, spec: Partial<FigureSpec> = {}): FigureResult {
  const times = column(table, "time_rabi_cycles");
  const ms = column(table, "m");
  const ps = column(table, "p_m");

  const labels: string[] = [];
  const groups = new Map<string, { m: number[]; p: number[] }>();
  times.forEach((time, i) => {
    const label = `t = ${formatTick(time)} cycles`;
    if (!groups.has(label)) {
      groups.set(label, { m: [], p: [] });
      labels.push(label);
    }
    const group = groups.get(label)!;
    group.m.push(ms[i]);
    group.p.push(ps[i]);
  });

  const xScale = linearScale(extent(ms), [MARGIN.left, WIDTH - MARGIN.right]);
  const yScale = linearScale([0, extent(ps)[1] * 1.05], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const parts = svgOpen();
  xAxis(parts, xScale, spec.xLabel ?? "net emitted phonons m", ticks(...xScale.domain));
  yAxis(parts, yScale, spec.yLabel ?? "probability p_m", ticks(...yScale.domain, 5));
  const series: SeriesMeta[] = [];
  labels.forEach((label, i) => {
    const group = groups.get(label)!;
    const order = group.m.map((_, k) => k).sort((a, b) => group.m[a] - group.m[b]);
    const mSorted = order.map((k) => group.m[k]);
    const pSorted = order.map((k) => group.p[k]);
    seriesPath(parts, mSorted, pSorted, xScale, yScale, label, PALETTE[i % PALETTE.length]);
    series.push({ label, pointCount: group.m.length });
  });
  legend(parts, labels, labels.map((_, i) => PALETTE[i % PALETTE.length]));
  parts.push(`</svg>`);

  return {
    kind: "distribution-panels",
    width: WIDTH,
    height: HEIGHT,
    series,
    zeroCrossings: [],
    svg: parts.join("\n"),
  };
}

export function buildDetuningSweepFigure(table: CsvTable, spec: Partial<FigureSpec> = {}): FigureResult {
  const deltas = column(table, "delta_ps_inv");
  const fluxes = column(table, "flux_ps_inv");
  const energies = column(table, "energy_rate_W");
  const temperatures = column(table, "temperature_K");

  const tempLabels: number[] = [];
  for (const t of temperatures) {
    if (!tempLabels.includes(t)) tempLabels.push(t);
  }

  const xScale = linearScale(extent(deltas), [MARGIN.left, WIDTH - MARGIN.right]);
  const [fluxMin, fluxMax] = extent(fluxes);
  const fluxScale = linearScale(
    [Math.min(fluxMin, 0) * 1.05, Math.max(fluxMax, 0) * 1.05],
    [HEIGHT - MARGIN.bottom, MARGIN.top]
  );
  const [energyMin, energyMax] = extent(energies);
  const energyScale = linearScale(
    [Math.min(energyMin, 0) * 1.05, Math.max(energyMax, 0) * 1.05],
    [HEIGHT - MARGIN.bottom, MARGIN.top]
  );

  const parts = svgOpen();
  xAxis(parts, xScale, spec.xLabel ?? "detuning (ps^-1)", ticks(...xScale.domain));
  yAxis(parts, fluxScale, spec.yLabel ?? "phonon flux (ps^-1)", ticks(...fluxScale.domain, 5), "left", "#c0392b");
  yAxis(parts, energyScale, "energy rate (W)", ticks(...energyScale.domain, 5), "right", "#2980b9");

  const zeroY = fmt(fluxScale(0));
  parts.push(
    `<line class="zero-line" x1="${MARGIN.left}" y1="${zeroY}" ` +
      `x2="${WIDTH - MARGIN.right}" y2="${zeroY}" stroke="#999" stroke-dasharray="4 3"/>`
  );

  const series: SeriesMeta[] = [];
  const crossings: ZeroCrossing[] = [];
  const legendLabels: string[] = [];
  const legendColors: string[] = [];
  tempLabels.forEach((temperature, i) => {
    const keep = temperatures.map((t, k) => (t === temperature ? k : -1)).filter((k) => k >= 0);
    const x = keep.map((k) => deltas[k]);
    const flux = keep.map((k) => fluxes[k]);
    const energy = keep.map((k) => energies[k]);
    const color = PALETTE[i % PALETTE.length];

    const fluxLabel = `flux T = ${formatTick(temperature)} K`;
    seriesPath(parts, x, flux, xScale, fluxScale, fluxLabel, color);
    series.push({ label: fluxLabel, pointCount: x.length });
    legendLabels.push(fluxLabel);
    legendColors.push(color);

    const energyLabel = `energy T = ${formatTick(temperature)} K`;
    seriesPath(parts, x, energy, xScale, energyScale, energyLabel, color, "6 3");
    series.push({ label: energyLabel, pointCount: x.length });

    for (const crossing of zeroCrossings(x, flux)) {
      crossings.push({ series: fluxLabel, x: crossing });
      parts.push(
        `<circle class="zero-crossing" data-series="${fluxLabel}" ` +
          `cx="${fmt(xScale(crossing))}" cy="${zeroY}" r="4.5" fill="none" ` +
          `stroke="${color}" stroke-width="1.5"/>`
      );
    }
  });
  legend(parts, legendLabels, legendColors);
  parts.push(`</svg>`);

  return {
    kind: "detuning-sweep",
    width: WIDTH,
    height: HEIGHT,
    series,
    zeroCrossings: crossings,
    svg: parts.join("\n"),
  };
}

export function buildGammaInsetFigure(table: CsvTable, spec: Partial<FigureSpec> = {}): FigureResult {
  const gammas = column(table, "gamma_ps_inv");
  const fluxes = column(table, "flux_ps_inv");
  if (gammas.some((g) => g <= 0)) {
    throw new Error("gamma inset needs positive decay rates for the log axis");
  }
  const logGamma = gammas.map((g) => Math.log10(g));

  const xScale = linearScale(extent(logGamma), [MARGIN.left, WIDTH - MARGIN.right]);
  const [fluxMin, fluxMax] = extent(fluxes);
  const yScale = linearScale(
    [Math.min(fluxMin, 0) * 1.05, Math.max(fluxMax, 0) * 1.05],
    [HEIGHT - MARGIN.bottom, MARGIN.top]
  );

  const parts = svgOpen();
  const decades = ticks(...xScale.domain, 4).filter((t) => Number.isInteger(t));
  const y0 = HEIGHT - MARGIN.bottom;
  parts.push(`<g class="x-axis" stroke="black">`);
  parts.push(`<line x1="${MARGIN.left}" y1="${y0}" x2="${WIDTH - MARGIN.right}" y2="${y0}"/>`);
  for (const d of decades) {
    const x = fmt(xScale(d));
    parts.push(`<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 5}"/>`);
    parts.push(
      `<text x="${x}" y="${y0 + 18}" stroke="none" text-anchor="middle">${formatTick(10 ** d)}</text>`
    );
  }
  parts.push(`</g>`);
  parts.push(
    `<text class="x-label" x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 10}" ` +
      `text-anchor="middle">${spec.xLabel ?? "decay rate (ps^-1, log)"}</text>`
  );
  yAxis(parts, yScale, spec.yLabel ?? "phonon flux (ps^-1)", ticks(...yScale.domain, 5));

  const zeroY = fmt(yScale(0));
  parts.push(
    `<line class="zero-line" x1="${MARGIN.left}" y1="${zeroY}" ` +
      `x2="${WIDTH - MARGIN.right}" y2="${zeroY}" stroke="#999" stroke-dasharray="4 3"/>`
  );
  seriesPath(parts, logGamma, fluxes, xScale, yScale, "steady flux", PALETTE[0]);
  parts.push(`</svg>`);

  return {
    kind: "gamma-inset",
    width: WIDTH,
    height: HEIGHT,
    series: [{ label: "steady flux", pointCount: gammas.length }],
    zeroCrossings: zeroCrossings(gammas, fluxes).map((x) => ({ series: "steady flux", x })),
    svg: parts.join("\n"),
  };
}

const BUILDERS: Record<FigureKind, { columns: string[]; build: typeof buildDistributionFigure }> = {
  "distribution-panels": { columns: DISTRIBUTION_COLUMNS, build: buildDistributionFigure },
  "detuning-sweep": { columns: DETUNING_COLUMNS, build: buildDetuningSweepFigure },
  "gamma-inset": { columns: GAMMA_COLUMNS, build: buildGammaInsetFigure },
};

/** Read the spec's CSV, validate its columns, render and write the SVG. */
export function renderFigure(spec: FigureSpec): FigureResult {
  const { columns, build } = BUILDERS[spec.kind];
  const table = readCsv(spec.csvPath);
  requireColumns(table, columns, spec.csvPath);
  const result = build(table, spec);
  writeFileSync(spec.outPath, result.svg + "\n", "utf8");
  return result;
}

/** Figure kind implied by the CSV header, or an error carrying both diffs. */
export function detectSweepKind(table: CsvTable, source: string): FigureKind {
  const matches = (expected: string[]) =>
    expected.length === table.header.length && expected.every((c) => table.header.includes(c));
  if (matches(DETUNING_COLUMNS)) return "detuning-sweep";
  if (matches(GAMMA_COLUMNS)) return "gamma-inset";
  throw new Error(
    `${source}: header [${table.header.join(", ")}] matches neither sweep layout; ` +
      `expected [${DETUNING_COLUMNS.join(", ")}] or [${GAMMA_COLUMNS.join(", ")}]`
  );
}
