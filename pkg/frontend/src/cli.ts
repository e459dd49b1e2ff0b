/**
 * Usage: node dist/cli.js <samples.csv> <contour.csv> <output.svg> [--targets 0.2,0.5,0.8]
 *
 * The contour CSV may be empty (scatter-only figure). Exits 2 on schema or
 * IO problems, naming the offending column.
 */

import { readFileSync, writeFileSync } from 'node:fs';

import { parseContourCsv, parseSampleCsv, SchemaError } from './csv.js';
import { renderFigure } from './figure.js';

export function main(argv: string[]): number {
  const positional: string[] = [];
  let targets: number[] | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === '--targets') {
      const value = argv[++i];
      if (!value) {
        console.error('error: --targets needs a comma-separated list');
        return 2;
      }
      targets = value.split(',').map(Number);
      if (targets.some((t) => Number.isNaN(t) || t < 0 || t >= 1)) {
        console.error(`error: --targets values must be in [0, 1): '${value}'`);
        return 2;
      }
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 3) {
    console.error('usage: cli.js <samples.csv> <contour.csv> <output.svg> [--targets 0.2,0.5]');
    return 2;
  }
  const [samplePath, contourPath, outputPath] = positional;
  try {
    const samples = parseSampleCsv(readFileSync(samplePath, 'utf8'));
    const contours = parseContourCsv(readFileSync(contourPath, 'utf8'));
    writeFileSync(outputPath, renderFigure(samples, contours, { targets }));
    console.error(
      `wrote ${outputPath}: ${samples.length} markers, ` +
        `${new Set(contours.map((r) => r.targetC)).size} contour targets`,
    );
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`error: ${err.message}`);
      return 2;
    }
    if (err instanceof Error && 'code' in err) {
      console.error(`error: ${err.message}`);
      return 2;
    }
    throw err;
  }
}

process.exitCode = main(process.argv.slice(2));
