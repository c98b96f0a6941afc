import { describe, expect, it } from "vitest";

import { ComputeResult } from "../src/api.js";
import {
  applyDrag,
  applyResponse,
  applyServiceError,
  initialScene,
  renderScene,
  sceneWarnings,
  toComputeRequest,
} from "../src/scene.js";
import { defaultViewport } from "../src/view.js";

const VIEWPORT = defaultViewport(900, 640);

function cleanResult(overrides: Partial<ComputeResult> = {}): ComputeResult {
  return {
    method: "det",
    method_used: "det",
    triple: [1, 2, 3],
    degeneracy: {
      coincident_pairs: [],
      collinear_triples: [],
      coconic_sextuples: [],
      clean: true,
    },
    pencil_nullity: 2,
    cubic_basis: [
      // x^3 - y^2 z and x^3 - x z^2: two visible curves through the window
      ["1", "0", "0", "0", "0", "0", "0", "-1", "0", "0"],
      ["1", "0", "0", "0", "0", "-1", "0", "0", "0", "0"],
    ],
    p9: ["2", "1", "1"],
    zero_vector: false,
    certification: {
      on_both_cubics: true,
      stack_rank_le_8: true,
      cayley_identity: true,
      distinct_from_inputs: true,
      certified: true,
    },
    counters: {},
    ...overrides,
  };
}

describe("scene state", () => {
  it("starts with eight handles and no response", () => {
    const scene = initialScene();
    expect(scene.points).toHaveLength(8);
    expect(scene.response).toBeNull();
  });

  it("applyDrag moves exactly one point immutably", () => {
    const scene = initialScene();
    const moved = applyDrag(scene, 3, 1.25, -0.5);
    expect(moved.points[2]).toEqual({ x: 1.25, y: -0.5 });
    expect(moved.points[0]).toEqual(scene.points[0]);
    expect(scene.points[2]).not.toEqual(moved.points[2]);
    expect(() => applyDrag(scene, 0, 0, 0)).toThrow();
    expect(() => applyDrag(scene, 9, 0, 0)).toThrow();
  });

  it("builds an exact wire document from positions", () => {
    const scene = applyDrag(initialScene(), 1, 0.5, -2.25);
    const request = toComputeRequest(scene);
    expect(request.points[0]).toEqual(["1/2", "-9/4", "1"]);
    expect(request.points).toHaveLength(8);
    expect(request.method).toBe("det");
  });
});

describe("warnings", () => {
  it("clean response produces no banners", () => {
    const scene = applyResponse(initialScene(), cleanResult());
    expect(sceneWarnings(scene).banners).toHaveLength(0);
  });

  it("names coincident, collinear and coconic violations", () => {
    const scene = applyResponse(
      initialScene(),
      cleanResult({
        degeneracy: {
          coincident_pairs: [[1, 2]],
          collinear_triples: [[3, 4, 5]],
          coconic_sextuples: [[1, 2, 3, 4, 5, 6]],
          clean: false,
        },
      }),
    );
    const warnings = sceneWarnings(scene);
    expect(warnings.banners.some((b) => b.includes("1 and 2 coincide"))).toBe(true);
    expect(warnings.banners.some((b) => b.includes("3, 4, 5 are collinear"))).toBe(true);
    expect(warnings.banners.some((b) => b.includes("lie on a conic"))).toBe(true);
    expect([...warnings.involvedPoints].sort()).toEqual([1, 2, 3, 4, 5, 6]);
  });

  it("flags the zero-vector degeneracy signal", () => {
    const scene = applyResponse(
      initialScene(),
      cleanResult({ p9: null, zero_vector: true, certification: null }),
    );
    expect(sceneWarnings(scene).banners.some((b) => b.includes("zero vector"))).toBe(true);
  });

  it("flags a ninth point outside the affine chart", () => {
    const scene = applyResponse(initialScene(), cleanResult({ p9: ["1", "2", "0"] }));
    expect(sceneWarnings(scene).banners.some((b) => b.includes("infinity"))).toBe(true);
  });

  it("reports service unreachability as a banner", () => {
    const scene = applyServiceError(initialScene(), "connection refused");
    expect(sceneWarnings(scene).banners.some((b) => b.includes("unreachable"))).toBe(true);
  });
});

describe("renderScene", () => {
  it("draws eight handles and no marker before any response", () => {
    const rendered = renderScene(initialScene(), VIEWPORT);
    const handles = rendered.commands.filter((c) => c.kind === "handle");
    expect(handles).toHaveLength(8);
    expect(rendered.markerScreen).toBeNull();
  });

  it("marker present iff the response carries a ninth point", () => {
    const withPoint = renderScene(applyResponse(initialScene(), cleanResult()), VIEWPORT);
    expect(withPoint.markerScreen).not.toBeNull();
    expect(withPoint.commands.some((c) => c.kind === "marker")).toBe(true);

    const without = renderScene(
      applyResponse(initialScene(), cleanResult({ p9: null, certification: null })),
      VIEWPORT,
    );
    expect(without.markerScreen).toBeNull();
    expect(without.commands.some((c) => c.kind === "marker")).toBe(false);
  });

  it("renders both pencil cubics as segment batches", () => {
    const rendered = renderScene(applyResponse(initialScene(), cleanResult()), VIEWPORT);
    expect(rendered.curveSegments).toHaveLength(2);
    expect(rendered.curveSegments[0]!.length).toBeGreaterThan(10);
    expect(rendered.curveSegments[1]!.length).toBeGreaterThan(10);
  });

  it("marks degenerate handles and stacks warning banners", () => {
    const rendered = renderScene(
      applyResponse(
        initialScene(),
        cleanResult({
          degeneracy: {
            coincident_pairs: [[1, 2]],
            collinear_triples: [],
            coconic_sextuples: [],
            clean: false,
          },
          p9: null,
          certification: null,
        }),
      ),
      VIEWPORT,
    );
    const warned = rendered.commands.filter((c) => c.kind === "handle" && c.warned);
    expect(warned).toHaveLength(2);
    expect(rendered.commands.some((c) => c.kind === "banner")).toBe(true);
  });

  it("is a pure function of state and viewport (resize keeps the picture)", () => {
    const scene = applyResponse(initialScene(), cleanResult());
    const a = renderScene(scene, VIEWPORT);
    const b = renderScene(scene, VIEWPORT);
    expect(a).toEqual(b);
    const resized = renderScene(scene, defaultViewport(450, 320));
    expect(resized.commands.filter((c) => c.kind === "handle")).toHaveLength(8);
    expect(resized.markerScreen).not.toBeNull();
  });

  it("never throws on a degenerate response", () => {
    const scene = applyResponse(
      initialScene(),
      cleanResult({ pencil_nullity: 3, cubic_basis: null, p9: null, certification: null }),
    );
    expect(() => renderScene(scene, VIEWPORT)).not.toThrow();
    const warnings = sceneWarnings(scene);
    expect(warnings.banners.some((b) => b.includes("3-dimensional"))).toBe(true);
  });
});
