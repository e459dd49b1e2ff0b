/**
 * The three closed-form curves drawn over the scatter. The renderer never
 * recomputes any physics beyond evaluating these for plotting.
 */

/** Probability normalisation: no state exists above p_s = 1 - m. */
export function physicalLimit(m: number): number {
  return 1 - m;
}

/** Separability threshold: p_s above (1 - m^2)/2 certifies entanglement. */
export function singletBound(m: number): number {
  return (1 - m * m) / 2;
}

/**
 * Minimum singlet fraction certifying concurrence of at least c,
 * defined for m <= 1 - c.
 */
export function contourMinPs(c: number, m: number): number {
  return (1 - c * c - m * m) / (2 * (1 - c));
}

export interface CurvePoint {
  m: number;
  pS: number;
}

/** Evaluate a curve at n equally spaced points on [m0, m1]. */
export function sampleCurve(
  fn: (m: number) => number,
  m0: number,
  m1: number,
  n: number,
): CurvePoint[] {
  const pts: CurvePoint[] = [];
  for (let i = 0; i < n; i++) {
    const m = m0 + ((m1 - m0) * i) / (n - 1);
    pts.push({ m, pS: fn(m) });
  }
  return pts;
}
