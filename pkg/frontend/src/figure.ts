/**
 * Deterministic SVG rendering of the (m, p_s) scatter with bound curves.
 *
 * Marker classes follow the entanglement of each sampled state: squares for
 * concurrence = 0, circles shaded by concurrence otherwise. Curves: physical
 * limit (solid), singlet bound (dashed), one iso-concurrence contour per
 * target (dotted), plus the empirical per-bin minima as crosses for
 * comparison. Output contains no timestamps; identical inputs give identical
 * bytes.
 */

import { ContourRow, SampleRow } from './csv.js';
import { contourMinPs, physicalLimit, sampleCurve, singletBound } from './curves.js';

export interface FigureOptions {
  width?: number;
  height?: number;
  targets?: number[];
  curvePoints?: number;
}

const MARGIN = { top: 28, right: 24, bottom: 52, left: 64 };
const SEPARABLE_EPS = 1e-12;

function fmt(x: number): string {
  return Number(x.toFixed(3)).toString();
}

/** Interpolate light to dark green with concurrence. */
function entangledColor(c: number): string {
  const t = Math.min(Math.max(c, 0), 1);
  const mix = (a: number, b: number) => Math.round(a + (b - a) * t);
  return `rgb(${mix(150, 0)},${mix(210, 110)},${mix(150, 40)})`;
}

export function renderFigure(
  samples: SampleRow[],
  contours: ContourRow[],
  options: FigureOptions = {},
): string {
  const width = options.width ?? 720;
  const height = options.height ?? 560;
  const curvePoints = options.curvePoints ?? 512;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const x = (m: number) => MARGIN.left + m * plotW;
  const y = (pS: number) => MARGIN.top + (1 - pS) * plotH;

  const targets =
    options.targets ??
    [...new Set(contours.map((r) => r.targetC))].sort((a, b) => a - b);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);

  // axes, ticks, gridlines
  const axis: string[] = [`<g class="axes" stroke="#333" fill="none" stroke-width="1">`];
  axis.push(`<rect x="${x(0)}" y="${y(1)}" width="${plotW}" height="${plotH}" stroke="#333"/>`);
  const labels: string[] = [`<g class="labels" fill="#333" font-size="12">`];
  for (let i = 0; i <= 5; i++) {
    const v = i / 5;
    axis.push(`<line x1="${x(v)}" y1="${y(0)}" x2="${x(v)}" y2="${y(0) + 5}"/>`);
    axis.push(`<line x1="${x(0) - 5}" y1="${y(v)}" x2="${x(0)}" y2="${y(v)}"/>`);
    labels.push(
      `<text x="${x(v)}" y="${y(0) + 18}" text-anchor="middle">${fmt(v)}</text>`,
    );
    labels.push(
      `<text x="${x(0) - 9}" y="${y(v) + 4}" text-anchor="end">${fmt(v)}</text>`,
    );
  }
  axis.push('</g>');
  labels.push(
    `<text x="${x(0.5)}" y="${height - 14}" text-anchor="middle" font-size="14">` +
      'magnetisation |m|</text>',
  );
  labels.push(
    `<text x="18" y="${y(0.5)}" text-anchor="middle" font-size="14" ` +
      `transform="rotate(-90 18 ${y(0.5)})">singlet fraction p_s</text>`,
  );
  labels.push('</g>');
  parts.push(axis.join(''));

  // scatter markers
  const squares: string[] = [`<g class="markers-separable" fill="#4878d0" fill-opacity="0.75">`];
  const circles: string[] = [`<g class="markers-entangled" fill-opacity="0.75">`];
  for (const row of samples) {
    const cx = x(row.mAbs);
    const cy = y(row.pS);
    if (row.concurrence <= SEPARABLE_EPS) {
      squares.push(`<rect x="${fmt(cx - 2)}" y="${fmt(cy - 2)}" width="4" height="4"/>`);
    } else {
      circles.push(
        `<circle cx="${fmt(cx)}" cy="${fmt(cy)}" r="2.2" fill="${entangledColor(row.concurrence)}"/>`,
      );
    }
  }
  squares.push('</g>');
  circles.push('</g>');
  parts.push(squares.join(''));
  parts.push(circles.join(''));

  // analytic curves
  const path = (pts: { m: number; pS: number }[]) =>
    pts.map((p, i) => `${i ? 'L' : 'M'}${fmt(x(p.m))},${fmt(y(p.pS))}`).join('');
  parts.push(
    `<path class="curve-physical" d="${path(sampleCurve(physicalLimit, 0, 1, curvePoints))}" ` +
      `stroke="#222" stroke-width="1.5" fill="none"/>`,
  );
  parts.push(
    `<path class="curve-singlet-bound" d="${path(sampleCurve(singletBound, 0, 1, curvePoints))}" ` +
      `stroke="#c44e52" stroke-width="1.5" stroke-dasharray="6 3" fill="none"/>`,
  );
  for (const c of targets) {
    if (c <= 0 || c >= 1) continue;
    const pts = sampleCurve((m) => contourMinPs(c, m), 0, 1 - c, curvePoints);
    parts.push(
      `<path class="curve-contour" data-target="${c}" d="${path(pts)}" ` +
        `stroke="#8a5fbf" stroke-width="1.2" stroke-dasharray="2 3" fill="none"/>`,
    );
    const end = pts[pts.length - 1];
    parts.push(
      `<text x="${fmt(x(end.m) + 4)}" y="${fmt(y(end.pS))}" font-size="11" fill="#8a5fbf">` +
        `C=${fmt(c)}</text>`,
    );
  }

  // empirical contour minima as crosses
  const crosses: string[] = [`<g class="markers-empirical" stroke="#5f3dc4" stroke-width="1.4">`];
  for (const row of contours) {
    if (!Number.isFinite(row.minPsEmpirical)) continue;
    const cx = x(row.mBinCenter);
    const cy = y(row.minPsEmpirical);
    crosses.push(`<line x1="${fmt(cx - 3)}" y1="${fmt(cy)}" x2="${fmt(cx + 3)}" y2="${fmt(cy)}"/>`);
    crosses.push(`<line x1="${fmt(cx)}" y1="${fmt(cy - 3)}" x2="${fmt(cx)}" y2="${fmt(cy + 3)}"/>`);
  }
  crosses.push('</g>');
  parts.push(crosses.join(''));

  // legend
  const lx = x(0.62);
  const ly = y(1) + 12;
  parts.push(
    `<g class="legend" font-size="12" fill="#333">` +
      `<rect x="${lx - 8}" y="${ly - 4}" width="${x(1) - lx - 4}" height="86" fill="white" ` +
      `stroke="#ccc"/>` +
      `<rect x="${lx}" y="${ly + 4}" width="6" height="6" fill="#4878d0"/>` +
      `<text x="${lx + 12}" y="${ly + 11}">concurrence = 0</text>` +
      `<circle cx="${lx + 3}" cy="${ly + 23}" r="3" fill="${entangledColor(0.6)}"/>` +
      `<text x="${lx + 12}" y="${ly + 27}">concurrence &gt; 0</text>` +
      `<line x1="${lx - 2}" y1="${ly + 39}" x2="${lx + 8}" y2="${ly + 39}" stroke="#222" ` +
      `stroke-width="1.5"/>` +
      `<text x="${lx + 12}" y="${ly + 43}">physical limit</text>` +
      `<line x1="${lx - 2}" y1="${ly + 55}" x2="${lx + 8}" y2="${ly + 55}" stroke="#c44e52" ` +
      `stroke-width="1.5" stroke-dasharray="6 3"/>` +
      `<text x="${lx + 12}" y="${ly + 59}">singlet bound</text>` +
      `<line x1="${lx - 2}" y1="${ly + 71}" x2="${lx + 8}" y2="${ly + 71}" stroke="#8a5fbf" ` +
      `stroke-width="1.2" stroke-dasharray="2 3"/>` +
      `<text x="${lx + 12}" y="${ly + 75}">min p_s for C</text>` +
      `</g>`,
  );

  parts.push(labels.join(''));
  parts.push('</svg>');
  return parts.join('\n') + '\n';
}
