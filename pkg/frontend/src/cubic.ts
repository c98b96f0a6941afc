/**
 * A ternary cubic from the service: ten exact coefficient strings in the
 * fixed monomial order x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z,
 * y z^2, z^3.  For rendering we evaluate on the affine chart z = 1.
 *
 * The exact coefficients can dwarf the float range, so normalization (the
 * zero set is scale-invariant) happens in exact integer arithmetic: every
 * coefficient is divided by the largest magnitude before any conversion.
 */

import { parseRational, ratioToNumber } from "./rational.js";

const EXPONENTS: ReadonlyArray<readonly [number, number]> = [
  [3, 0], [2, 1], [2, 0], [1, 2], [1, 1], [1, 0], [0, 3], [0, 2], [0, 1], [0, 0],
];

export type AffineCubic = (x: number, y: number) => number;

export function affineCubic(coeffs: readonly string[]): AffineCubic {
  if (coeffs.length !== 10) {
    throw new Error(`a ternary cubic has 10 coefficients, got ${coeffs.length}`);
  }
  const exact = coeffs.map(parseRational);
  // argmax of |p/q| by cross multiplication, exactly
  let m = 0;
  const magGreater = (i: number, j: number) => {
    const a = exact[i]!;
    const b = exact[j]!;
    const left = (a.p < 0n ? -a.p : a.p) * b.q;
    const right = (b.p < 0n ? -b.p : b.p) * a.q;
    return left > right;
  };
  for (let i = 1; i < 10; i++) {
    if (magGreater(i, m)) {
      m = i;
    }
  }
  const top = exact[m]!;
  const topAbs = top.p < 0n ? -top.p : top.p;
  const c = exact.map(({ p, q }) =>
    topAbs === 0n ? 0 : ratioToNumber(p * top.q, q * topAbs),
  );
  return (x, y) => {
    let total = 0;
    for (let i = 0; i < 10; i++) {
      const [a, b] = EXPONENTS[i]!;
      total += c[i]! * Math.pow(x, a) * Math.pow(y, b);
    }
    return total;
  };
}
