export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

/** Linear map from domain to range; degenerate domains get a unit pad. */
export function linearScale(domain: [number, number], range: [number, number]): Scale {
  let [d0, d1] = domain;
  if (d0 === d1) {
    d0 -= 0.5;
    d1 += 0.5;
  }
  const [r0, r1] = range;
  const k = (r1 - r0) / (d1 - d0);
  const scale = ((value: number) => r0 + (value - d0) * k) as Scale;
  scale.domain = [d0, d1];
  scale.range = range;
  return scale;
}

export function extent(values: number[]): [number, number] {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  if (!Number.isFinite(min) || !Number.isFinite(max)) {
    throw new Error("extent of an empty or non-finite series");
  }
  return [min, max];
}

/** Round tick positions covering the domain, at most `count + 1` of them. */
export function ticks(min: number, max: number, count = 6): number[] {
  if (min === max) return [min];
  const span = max - min;
  const rawStep = span / count;
  const magnitude = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = magnitude;
  for (const multiple of [1, 2, 5, 10]) {
    if (magnitude * multiple >= rawStep) {
      step = magnitude * multiple;
      break;
    }
  }
  const start = Math.ceil(min / step) * step;
  const out: number[] = [];
  for (let v = start; v <= max + 1e-12 * span; v += step) {
    out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return out;
}

/** Compact deterministic tick label. */
export function formatTick(value: number): string {
  if (value === 0) return "0";
  const magnitude = Math.abs(value);
  if (magnitude >= 1e4 || magnitude < 1e-3) {
    return value.toExponential(1).replace("e+", "e");
  }
  return String(Number(value.toPrecision(4)));
}
