import { readFileSync } from 'node:fs';
import { join } from 'node:path';

import { describe, expect, it } from 'vitest';

import { parseContourCsv, parseSampleCsv, SchemaError } from './csv.js';

const fixtures = join(__dirname, '..', 'test', 'fixtures');
const read = (name: string) => readFileSync(join(fixtures, name), 'utf8');

describe('parseSampleCsv', () => {
  it('parses the harness output', () => {
    const rows = parseSampleCsv(read('samples_spun.csv'));
    expect(rows).toHaveLength(600);
    expect(rows[0].index).toBe(0);
    expect(rows[0].family).toBe('spun');
    for (const row of rows) {
      expect(row.pS).toBeGreaterThanOrEqual(0);
      expect(row.pS).toBeLessthanOrEqual ?? 0;
      expect(row.concurrence).toBeGreaterThanOrEqual(0);
      expect(typeof row.certified).toBe('boolean');
    }
  });

  it('names a wrong column', () => {
    const bad = 'index,family,magnetisation,p_s,concurrence,certified,bound_value\n';
    expect(() => parseSampleCsv(bad)).toThrowError(SchemaError);
    expect(() => parseSampleCsv(bad)).toThrowError(/column 2 is 'magnetisation'/);
  });

  it('names a missing column', () => {
    const bad = 'index,family,m_abs,p_s,concurrence,certified\n';
    expect(() => parseSampleCsv(bad)).toThrowError(/missing column 'bound_value'/);
  });

  it('rejects non-numeric cells', () => {
    const bad =
      'index,family,m_abs,p_s,concurrence,certified,bound_value\n0,spun,x,0.5,0,false,0.5\n';
    expect(() => parseSampleCsv(bad)).toThrowError(/'m_abs' is not a number/);
  });
});

describe('parseContourCsv', () => {
  it('parses the harness output including nan cells', () => {
    const rows = parseContourCsv(read('contour.csv'));
    expect(rows).toHaveLength(150);
    const targets = new Set(rows.map((r) => r.targetC));
    expect([...targets].sort()).toEqual([0.2, 0.5, 0.8]);
    const outOfDomain = rows.filter((r) => r.targetC === 0.8 && r.mBinCenter > 0.2);
    expect(outOfDomain.length).toBeGreaterThan(0);
    for (const row of outOfDomain) expect(Number.isNaN(row.minPsAnalytic)).toBe(true);
  });

  it('accepts an empty file as no contours', () => {
    expect(parseContourCsv(read('contour_empty.csv'))).toEqual([]);
  });

  it('accepts the optional reference column', () => {
    const text =
      'target_c,m_bin_center,min_ps_empirical,min_ps_analytic,min_ps_reference\n' +
      '0.5,0.05,0.75,0.7475,0.7742918851774317\n';
    const rows = parseContourCsv(text);
    expect(rows[0].minPsReference).toBeCloseTo(0.7743, 4);
  });

  it('names unexpected columns', () => {
    const bad = 'target_c,m_bin_center,min_ps_empirical,min_ps_analytic,extra,more\n';
    expect(() => parseContourCsv(bad)).toThrowError(/column 4 is 'extra'|unexpected column/);
  });
});
