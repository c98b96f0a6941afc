/**
 * Exact rational round-trips between the canvas (binary floats) and the
 * service (exact rational strings).
 *
 * Every float is a dyadic rational m / 2^k, so the outgoing conversion is
 * exact: no rounding heuristics, identical drags produce identical wire
 * bytes.  The incoming direction only feeds rendering, so it returns a
 * plain number, but it must survive the enormous integer coordinates the
 * exact pipeline produces (hundreds of digits).
 */

/** Exact dyadic representation of a finite float as "p" or "p/q". */
export function floatToRationalString(x: number): string {
  if (!Number.isFinite(x)) {
    throw new Error(`not a finite number: ${x}`);
  }
  if (Number.isInteger(x)) {
    return BigInt(x).toString();
  }
  // scale by 2 until integral; a double has at most 1074 fractional bits
  let value = x;
  let k = 0n;
  while (!Number.isInteger(value)) {
    value *= 2;
    k += 1n;
  }
  return `${BigInt(value)}/${(1n << k).toString()}`;
}

function parseSignedBigInt(text: string): bigint {
  return BigInt(text);
}

/** Approximate value of an exact ratio of (possibly huge) integers. */
export function ratioToNumber(p: bigint, q: bigint): number {
  if (q === 0n) {
    return Number.NaN;
  }
  if (q < 0n) {
    p = -p;
    q = -q;
  }
  const negative = p < 0n;
  let num = negative ? -p : p;
  let den = q;
  // keep both operands within float range, preserving the ratio
  const bits = (v: bigint) => v.toString(2).length;
  const excess = Math.max(bits(num), bits(den)) - 960;
  if (excess > 0) {
    const shift = BigInt(excess);
    num >>= shift;
    den >>= shift;
    if (den === 0n) {
      return negative ? -Infinity : Infinity;
    }
  }
  const out = Number(num) / Number(den);
  return negative ? -out : out;
}

/** Parse an exact rational string ("7", "22/7", "3.25") for display only. */
export function rationalStringToNumber(text: string): number {
  const s = text.trim();
  const slash = s.indexOf("/");
  if (slash >= 0) {
    return ratioToNumber(parseSignedBigInt(s.slice(0, slash)), parseSignedBigInt(s.slice(slash + 1)));
  }
  const dot = s.indexOf(".");
  if (dot >= 0) {
    const digits = s.length - dot - 1;
    return ratioToNumber(parseSignedBigInt(s.slice(0, dot) + s.slice(dot + 1)), 10n ** BigInt(digits));
  }
  return ratioToNumber(parseSignedBigInt(s), 1n);
}

/**
 * Affine (x/z, y/z) of a homogeneous exact triple, or null when the point
 * sits at or beyond the chart: z exactly zero, or so small next to x and y
 * that the affine image leaves any reasonable window.
 */
export function affineFromHomogeneous(
  triple: readonly [string, string, string],
): { x: number; y: number } | null {
  const [xs, ys, zs] = triple;
  const x = parseRational(xs);
  const y = parseRational(ys);
  const z = parseRational(zs);
  if (z.p === 0n) {
    return null;
  }
  const ax = ratioToNumber(x.p * z.q, z.p * x.q);
  const ay = ratioToNumber(y.p * z.q, z.p * y.q);
  if (!Number.isFinite(ax) || !Number.isFinite(ay)) {
    return null;
  }
  const limit = 1e9; // far outside any sensible viewport
  if (Math.abs(ax) > limit || Math.abs(ay) > limit) {
    return null;
  }
  return { x: ax, y: ay };
}

/** Exact numerator/denominator of a rational string (q always positive). */
export function parseRational(text: string): { p: bigint; q: bigint } {
  const s = text.trim();
  const slash = s.indexOf("/");
  if (slash >= 0) {
    return { p: parseSignedBigInt(s.slice(0, slash)), q: parseSignedBigInt(s.slice(slash + 1)) };
  }
  const dot = s.indexOf(".");
  if (dot >= 0) {
    const digits = s.length - dot - 1;
    return { p: parseSignedBigInt(s.slice(0, dot) + s.slice(dot + 1)), q: 10n ** BigInt(digits) };
  }
  return { p: parseSignedBigInt(s), q: 1n };
}
