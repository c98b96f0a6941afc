import { describe, expect, it } from "vitest";

import { affineCubic } from "../src/cubic.js";
import { distanceToSegments, zeroContour } from "../src/marching.js";

const WINDOW = { xMin: -3, xMax: 3, yMin: -3, yMax: 3 };

describe("zeroContour", () => {
  it("traces a circle to sub-cell accuracy", () => {
    const field = (x: number, y: number) => x * x + y * y - 4;
    const segments = zeroContour(field, WINDOW, 200, 200);
    expect(segments.length).toBeGreaterThan(50);
    for (const [x1, y1, x2, y2] of segments) {
      expect(Math.hypot(x1, y1)).toBeCloseTo(2, 1);
      expect(Math.hypot(x2, y2)).toBeCloseTo(2, 1);
    }
    // the contour passes within a pixel-scale distance of every circle point
    for (let k = 0; k < 16; k++) {
      const angle = (2 * Math.PI * k) / 16;
      const d = distanceToSegments(2 * Math.cos(angle), 2 * Math.sin(angle), segments);
      expect(d).toBeLessThan(0.05);
    }
  });

  it("returns nothing for a sign-definite field", () => {
    const segments = zeroContour((x, y) => x * x + y * y + 1, WINDOW, 64, 64);
    expect(segments).toHaveLength(0);
  });

  it("ignores cells with non-finite samples instead of throwing", () => {
    const field = (x: number, y: number) => (x > 0 ? Number.NaN : x + y);
    expect(() => zeroContour(field, WINDOW, 32, 32)).not.toThrow();
  });

  it("handles a singular cubic through the window", () => {
    // x^3 - y^2 z: the cuspidal cubic y^2 = x^3 on the chart z = 1
    const coeffs = ["1", "0", "0", "0", "0", "0", "0", "-1", "0", "0"];
    const f = affineCubic(coeffs);
    const segments = zeroContour(f, WINDOW, 150, 150);
    expect(segments.length).toBeGreaterThan(10);
    for (const [x1, y1] of segments) {
      expect(Math.abs(x1 ** 3 - y1 ** 2)).toBeLessThan(0.4);
    }
  });
});

describe("affineCubic", () => {
  it("evaluates the monomials in the fixed order", () => {
    // x^3 + 2 x^2 y + 3 x^2 + 4 x y^2 + 5 x y + 6 x + 7 y^3 + 8 y^2 + 9 y + 10
    const coeffs = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10"];
    const f = affineCubic(coeffs);
    const x = 2;
    const y = -1;
    const expected =
      (x ** 3 + 2 * x * x * y + 3 * x * x + 4 * x * y * y + 5 * x * y + 6 * x +
        7 * y ** 3 + 8 * y * y + 9 * y + 10) / 10; // normalized by max |coeff|
    expect(f(x, y)).toBeCloseTo(expected, 12);
  });

  it("normalizes huge exact coefficients into float range", () => {
    const big = (10n ** 310n).toString();
    const coeffs = [big, "0", "0", "0", "0", "0", "0", `-${big}`, "0", "0"];
    const f = affineCubic(coeffs);
    // zero set of x^3 = y^2 is unchanged by scaling
    expect(f(1, 1)).toBeCloseTo(0, 12);
    expect(f(4, 8)).toBeCloseTo(0, 12);
    expect(Number.isFinite(f(2, 3))).toBe(true);
  });

  it("rejects coefficient lists of the wrong length", () => {
    expect(() => affineCubic(["1", "2"])).toThrow();
  });
});
