import { readCsv } from "./csv.js";
import { FigureKind, detectSweepKind, renderFigure } from "./figures.js";

export interface CliOptions {
  csv: string;
  out: string;
}

export function parseArgs(argv: string[], program: string): CliOptions {
  const options: Partial<CliOptions> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) {
      throw new Error(`${program}: ${flag} needs a value`);
    }
    if (flag === "--csv") options.csv = value;
    else if (flag === "--out") options.out = value;
    else throw new Error(`${program}: unknown flag ${flag} (expected --csv, --out)`);
  }
  if (!options.csv || !options.out) {
    throw new Error(`${program}: both --csv <path> and --out <path> are required`);
  }
  return options as CliOptions;
}

function run(program: string, argv: string[], kind: () => FigureKind, csv: string, out: string): number {
  const resolved = kind();
  const result = renderFigure({ csvPath: csv, outPath: out, kind: resolved });
  console.error(
    `${program}: wrote ${out} (${resolved}, ${result.series.length} series, ` +
      `${result.zeroCrossings.length} zero crossings)`
  );
  return 0;
}

/** Entry point for `fig_distribution --csv <file> --out <file>`. */
export function mainDistribution(argv: string[]): number {
  try {
    const { csv, out } = parseArgs(argv, "fig_distribution");
    return run("fig_distribution", argv, () => "distribution-panels", csv, out);
  } catch (error) {
    console.error(String(error instanceof Error ? error.message : error));
    return 1;
  }
}

/** Entry point for `fig_sweeps --csv <file> --out <file>`; kind from the header. */
export function mainSweeps(argv: string[]): number {
  try {
    const { csv, out } = parseArgs(argv, "fig_sweeps");
    return run("fig_sweeps", argv, () => detectSweepKind(readCsv(csv), csv), csv, out);
  } catch (error) {
    console.error(String(error instanceof Error ? error.message : error));
    return 1;
  }
}
