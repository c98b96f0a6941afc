import { describe, expect, it } from "vitest";

import {
  affineFromHomogeneous,
  floatToRationalString,
  ratioToNumber,
  rationalStringToNumber,
} from "../src/rational.js";

describe("floatToRationalString", () => {
  it("sends integers as plain integers", () => {
    expect(floatToRationalString(7)).toBe("7");
    expect(floatToRationalString(-12)).toBe("-12");
    expect(floatToRationalString(0)).toBe("0");
  });

  it("is exact on dyadic fractions", () => {
    expect(floatToRationalString(0.5)).toBe("1/2");
    expect(floatToRationalString(-3.25)).toBe("-13/4");
    expect(floatToRationalString(0.1 + 0.2)).not.toBe("3/10"); // binary, verbatim
  });

  it("round-trips every float exactly", () => {
    for (const x of [0.1, -2.7, 1e-8, 123.456, 5 / 3]) {
      const s = floatToRationalString(x);
      expect(rationalStringToNumber(s)).toBe(x);
    }
  });

  it("rejects non-finite input", () => {
    expect(() => floatToRationalString(Infinity)).toThrow();
    expect(() => floatToRationalString(NaN)).toThrow();
  });
});

describe("rationalStringToNumber", () => {
  it("parses the three exact forms", () => {
    expect(rationalStringToNumber("7")).toBe(7);
    expect(rationalStringToNumber("22/7")).toBeCloseTo(22 / 7, 12);
    expect(rationalStringToNumber("3.25")).toBe(3.25);
    expect(rationalStringToNumber("-0.5")).toBe(-0.5);
  });

  it("survives huge integers", () => {
    const big = "9".repeat(400);
    const value = rationalStringToNumber(`${big}/${big}`);
    expect(value).toBe(1);
    const ratio = ratioToNumber(3n * 10n ** 350n, 10n ** 350n);
    expect(ratio).toBe(3);
  });
});

describe("affineFromHomogeneous", () => {
  it("divides through by z", () => {
    expect(affineFromHomogeneous(["6", "9", "3"])).toEqual({ x: 2, y: 3 });
    expect(affineFromHomogeneous(["1/2", "1/4", "1/8"])).toEqual({ x: 4, y: 2 });
  });

  it("returns null at the line at infinity", () => {
    expect(affineFromHomogeneous(["1", "2", "0"])).toBeNull();
  });

  it("returns null when z is negligible next to x and y", () => {
    expect(affineFromHomogeneous([`${10n ** 40n}`, "1", "1"])).toBeNull();
  });
});
