/**
 * Marching-squares extraction of the zero contour of a scalar field over a
 * rectangular window.  Returns line segments in world coordinates; the
 * caller draws them, so this stays a pure function of (field, window,
 * resolution).  Non-finite samples poison their cells (nothing is drawn
 * there) rather than throwing.
 */

export interface Window2D {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export type Segment = readonly [number, number, number, number]; // x1 y1 x2 y2

export function zeroContour(
  field: (x: number, y: number) => number,
  window: Window2D,
  cols: number,
  rows: number,
): Segment[] {
  const dx = (window.xMax - window.xMin) / cols;
  const dy = (window.yMax - window.yMin) / rows;
  const values: number[][] = [];
  for (let j = 0; j <= rows; j++) {
    const row: number[] = [];
    const y = window.yMin + j * dy;
    for (let i = 0; i <= cols; i++) {
      row.push(field(window.xMin + i * dx, y));
    }
    values.push(row);
  }

  const segments: Segment[] = [];
  const cut = (xa: number, ya: number, va: number, xb: number, yb: number, vb: number) => {
    const t = va / (va - vb);
    return [xa + t * (xb - xa), ya + t * (yb - ya)] as const;
  };

  for (let j = 0; j < rows; j++) {
    for (let i = 0; i < cols; i++) {
      const x0 = window.xMin + i * dx;
      const y0 = window.yMin + j * dy;
      const x1 = x0 + dx;
      const y1 = y0 + dy;
      const v00 = values[j]![i]!;
      const v10 = values[j]![i + 1]!;
      const v01 = values[j + 1]![i]!;
      const v11 = values[j + 1]![i + 1]!;
      if (![v00, v10, v01, v11].every(Number.isFinite)) {
        continue;
      }
      // crossing points on the four cell edges
      const crossings: Array<readonly [number, number]> = [];
      if (v00 === 0 && v10 === 0) {
        segments.push([x0, y0, x1, y0]);
        continue;
      }
      if ((v00 < 0) !== (v10 < 0) || v00 === 0 || v10 === 0) {
        if (v00 !== v10) crossings.push(cut(x0, y0, v00, x1, y0, v10));
      }
      if ((v10 < 0) !== (v11 < 0) || v10 === 0 || v11 === 0) {
        if (v10 !== v11) crossings.push(cut(x1, y0, v10, x1, y1, v11));
      }
      if ((v01 < 0) !== (v11 < 0) || v01 === 0 || v11 === 0) {
        if (v01 !== v11) crossings.push(cut(x0, y1, v01, x1, y1, v11));
      }
      if ((v00 < 0) !== (v01 < 0) || v00 === 0 || v01 === 0) {
        if (v00 !== v01) crossings.push(cut(x0, y0, v00, x0, y1, v01));
      }
      if (crossings.length === 2) {
        const [a, b] = [crossings[0]!, crossings[1]!];
        segments.push([a[0], a[1], b[0], b[1]]);
      } else if (crossings.length === 4) {
        // saddle: disambiguate by the center sample
        const center = field(x0 + dx / 2, y0 + dy / 2);
        const sameAsV00 = (center < 0) === (v00 < 0);
        const [e0, e1, e2, e3] = [crossings[0]!, crossings[1]!, crossings[2]!, crossings[3]!];
        if (sameAsV00) {
          segments.push([e0[0], e0[1], e1[0], e1[1]]);
          segments.push([e2[0], e2[1], e3[0], e3[1]]);
        } else {
          segments.push([e0[0], e0[1], e3[0], e3[1]]);
          segments.push([e1[0], e1[1], e2[0], e2[1]]);
        }
      }
    }
  }
  return segments;
}

/** Shortest distance from a point to any extracted segment (for tests and
 * the marker-on-curve sanity check). */
export function distanceToSegments(x: number, y: number, segments: readonly Segment[]): number {
  let best = Infinity;
  for (const [x1, y1, x2, y2] of segments) {
    const vx = x2 - x1;
    const vy = y2 - y1;
    const lengthSq = vx * vx + vy * vy;
    let t = lengthSq > 0 ? ((x - x1) * vx + (y - y1) * vy) / lengthSq : 0;
    t = Math.max(0, Math.min(1, t));
    const dx = x - (x1 + t * vx);
    const dy = y - (y1 + t * vy);
    best = Math.min(best, Math.hypot(dx, dy));
  }
  return best;
}
