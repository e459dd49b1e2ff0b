/** Parsing and validation of the harness CSV files. */

export interface SampleRow {
  index: number;
  family: string;
  mAbs: number;
  pS: number;
  concurrence: number;
  certified: boolean;
  boundValue: number;
}

export interface ContourRow {
  targetC: number;
  mBinCenter: number;
  minPsEmpirical: number;
  minPsAnalytic: number;
  minPsReference?: number;
}

export class SchemaError extends Error {}

const SAMPLE_HEADER = [
  'index',
  'family',
  'm_abs',
  'p_s',
  'concurrence',
  'certified',
  'bound_value',
];

const CONTOUR_HEADER = [
  'target_c',
  'm_bin_center',
  'min_ps_empirical',
  'min_ps_analytic',
];

function splitLines(text: string): string[] {
  return text.split(/\r?\n/).filter((line) => line.length > 0);
}

/** Compare a header against the expected columns, naming the first mismatch. */
function checkHeader(kind: string, got: string[], expected: string[], allowExtra?: string): void {
  const limit = Math.max(got.length, expected.length);
  for (let i = 0; i < limit; i++) {
    const want = expected[i] ?? (i === expected.length ? allowExtra : undefined);
    if (want === undefined) {
      throw new SchemaError(`${kind} CSV: unexpected column '${got[i]}' at position ${i}`);
    }
    if (got[i] === undefined) {
      throw new SchemaError(`${kind} CSV: missing column '${want}' at position ${i}`);
    }
    if (got[i] !== want) {
      throw new SchemaError(
        `${kind} CSV: column ${i} is '${got[i]}', expected '${want}'`,
      );
    }
  }
}

function num(field: string, value: string, line: number): number {
  if (value === 'nan') return NaN;
  const x = Number(value);
  if (value === '' || Number.isNaN(x)) {
    throw new SchemaError(`line ${line}: column '${field}' is not a number: '${value}'`);
  }
  return x;
}

export function parseSampleCsv(text: string): SampleRow[] {
  const lines = splitLines(text);
  if (lines.length === 0) throw new SchemaError('sample CSV: empty file');
  checkHeader('sample', lines[0].split(','), SAMPLE_HEADER);
  return lines.slice(1).map((line, i) => {
    const cells = line.split(',');
    if (cells.length !== SAMPLE_HEADER.length) {
      throw new SchemaError(`sample CSV line ${i + 2}: expected 7 fields, got ${cells.length}`);
    }
    if (cells[5] !== 'true' && cells[5] !== 'false') {
      throw new SchemaError(`line ${i + 2}: column 'certified' must be true/false`);
    }
    return {
      index: num('index', cells[0], i + 2),
      family: cells[1],
      mAbs: num('m_abs', cells[2], i + 2),
      pS: num('p_s', cells[3], i + 2),
      concurrence: num('concurrence', cells[4], i + 2),
      certified: cells[5] === 'true',
      boundValue: num('bound_value', cells[6], i + 2),
    };
  });
}

export function parseContourCsv(text: string): ContourRow[] {
  const lines = splitLines(text);
  if (lines.length === 0) return []; // empty contour file: scatter-only figure
  const header = lines[0].split(',');
  checkHeader('contour', header, CONTOUR_HEADER, 'min_ps_reference');
  const hasReference = header.length === CONTOUR_HEADER.length + 1;
  return lines.slice(1).map((line, i) => {
    const cells = line.split(',');
    const expected = CONTOUR_HEADER.length + (hasReference ? 1 : 0);
    if (cells.length !== expected) {
      throw new SchemaError(
        `contour CSV line ${i + 2}: expected ${expected} fields, got ${cells.length}`,
      );
    }
    const row: ContourRow = {
      targetC: num('target_c', cells[0], i + 2),
      mBinCenter: num('m_bin_center', cells[1], i + 2),
      minPsEmpirical: num('min_ps_empirical', cells[2], i + 2),
      minPsAnalytic: num('min_ps_analytic', cells[3], i + 2),
    };
    if (hasReference) row.minPsReference = num('min_ps_reference', cells[4], i + 2);
    return row;
  });
}
