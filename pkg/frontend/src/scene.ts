/**
 * Scene state and pure rendering.
 *
 * The client does no arithmetic that affects correctness: point positions
 * are the user's, and everything else drawn (the ninth point, the two
 * pencil cubics, warnings) comes verbatim from the last service response.
 * Rendering reduces to drawing commands so it can be tested without a
 * canvas; a thin painter executes the commands on a 2D context.
 */

import { ComputeResult, Method } from "./api.js";
import { affineCubic } from "./cubic.js";
import { distanceToSegments, Segment, zeroContour } from "./marching.js";
import { affineFromHomogeneous, floatToRationalString } from "./rational.js";
import { Viewport, visibleWindow, worldToScreen } from "./view.js";

export interface ScenePoint {
  x: number;
  y: number;
}

export interface SceneState {
  points: ScenePoint[]; // exactly 8, affine chart z = 1
  method: Method;
  response: ComputeResult | null;
  serviceError: string | null;
}

export function initialScene(): SceneState {
  // A nondegenerate layout whose ninth point sits near the window center.
  return {
    points: [
      { x: -4, y: -2.5 }, { x: 4, y: -3 }, { x: 4.25, y: 2.5 }, { x: -3.75, y: 3 },
      { x: 0.25, y: -4.75 }, { x: 6, y: -0.5 }, { x: 0, y: 4.5 }, { x: -6, y: 0.75 },
    ],
    method: "det",
    response: null,
    serviceError: null,
  };
}

export function applyDrag(state: SceneState, id: number, x: number, y: number): SceneState {
  if (id < 1 || id > 8) {
    throw new Error(`point id out of range 1..8: ${id}`);
  }
  const points = state.points.map((p, i) => (i === id - 1 ? { x, y } : p));
  return { ...state, points };
}

export function applyResponse(state: SceneState, response: ComputeResult): SceneState {
  return { ...state, response, serviceError: null };
}

export function applyServiceError(state: SceneState, message: string): SceneState {
  return { ...state, serviceError: message };
}

export function setMethod(state: SceneState, method: Method): SceneState {
  return { ...state, method };
}

/** Exact wire document for the current handle positions. */
export function toComputeRequest(state: SceneState) {
  return {
    points: state.points.map(
      (p) => [floatToRationalString(p.x), floatToRationalString(p.y), "1"] as [string, string, string],
    ),
    method: state.method,
  };
}

// ---------------------------------------------------------------------------
// warnings
// ---------------------------------------------------------------------------

export interface Warnings {
  banners: string[];
  involvedPoints: Set<number>; // 1-based indices highlighted in the scene
}

export function sceneWarnings(state: SceneState): Warnings {
  const banners: string[] = [];
  const involved = new Set<number>();
  if (state.serviceError) {
    banners.push(`service unreachable: ${state.serviceError}`);
  }
  const r = state.response;
  if (r) {
    for (const pair of r.degeneracy.coincident_pairs) {
      banners.push(`points ${pair.join(" and ")} coincide`);
      pair.forEach((i) => involved.add(i));
    }
    for (const triple of r.degeneracy.collinear_triples) {
      banners.push(`points ${triple.join(", ")} are collinear`);
      triple.forEach((i) => involved.add(i));
    }
    for (const six of r.degeneracy.coconic_sextuples) {
      banners.push(`points ${six.join(", ")} lie on a conic`);
      six.forEach((i) => involved.add(i));
    }
    if (r.pencil_nullity !== 2) {
      banners.push(`cubics through the points form a ${r.pencil_nullity}-dimensional system; no unique ninth point`);
    } else if (r.zero_vector) {
      banners.push("formula returned the zero vector: degenerate configuration");
    } else if (r.p9 && !affineFromHomogeneous(r.p9)) {
      banners.push("ninth point is outside the affine chart (at or near the line at infinity)");
    }
    if (r.certification && !r.certification.certified) {
      banners.push("certification failed; displayed point is not trustworthy");
    }
  }
  return { banners, involvedPoints: involved };
}

// ---------------------------------------------------------------------------
// drawing commands
// ---------------------------------------------------------------------------

export type DrawCommand =
  | { kind: "clear" }
  | { kind: "segments"; segments: Segment[]; color: string; width: number }
  | { kind: "handle"; sx: number; sy: number; label: string; warned: boolean }
  | { kind: "marker"; sx: number; sy: number } // the ninth point
  | { kind: "banner"; row: number; text: string };

export interface RenderedScene {
  commands: DrawCommand[];
  curveSegments: Segment[][]; // screen-space segments per pencil cubic
  markerScreen: { sx: number; sy: number } | null;
}

const CURVE_COLORS = ["#0a7", "#a40"];

/** Grid resolution scales with the viewport so curves stay pixel-accurate. */
function gridSize(viewport: Viewport): { cols: number; rows: number } {
  return {
    cols: Math.max(64, Math.min(512, Math.round(viewport.width / 3))),
    rows: Math.max(64, Math.min(512, Math.round(viewport.height / 3))),
  };
}

export function renderScene(state: SceneState, viewport: Viewport): RenderedScene {
  const commands: DrawCommand[] = [{ kind: "clear" }];
  const warnings = sceneWarnings(state);
  const window = visibleWindow(viewport);
  const { cols, rows } = gridSize(viewport);
  const curveSegments: Segment[][] = [];

  const r = state.response;
  if (r?.cubic_basis) {
    r.cubic_basis.forEach((coeffs, index) => {
      const f = affineCubic(coeffs);
      const world = zeroContour(f, window, cols, rows);
      const screen = world.map(([x1, y1, x2, y2]) => {
        const a = worldToScreen(viewport, x1, y1);
        const b = worldToScreen(viewport, x2, y2);
        return [a.sx, a.sy, b.sx, b.sy] as const;
      });
      curveSegments.push(screen);
      commands.push({
        kind: "segments",
        segments: screen,
        color: CURVE_COLORS[index % CURVE_COLORS.length]!,
        width: 1.5,
      });
    });
  }

  state.points.forEach((p, i) => {
    const { sx, sy } = worldToScreen(viewport, p.x, p.y);
    commands.push({ kind: "handle", sx, sy, label: String(i + 1), warned: warnings.involvedPoints.has(i + 1) });
  });

  let markerScreen: { sx: number; sy: number } | null = null;
  if (r?.p9) {
    const affine = affineFromHomogeneous(r.p9);
    if (affine) {
      const { sx, sy } = worldToScreen(viewport, affine.x, affine.y);
      markerScreen = { sx, sy };
      commands.push({ kind: "marker", sx, sy });
    }
  }

  warnings.banners.forEach((text, row) => commands.push({ kind: "banner", row, text }));
  return { commands, curveSegments, markerScreen };
}

/** Pixel distance from the ninth-point marker to the nearest rendered point
 * of each pencil cubic (diagnostic for the marker-on-curve property). */
export function markerCurveDistances(rendered: RenderedScene): number[] {
  if (!rendered.markerScreen) {
    return [];
  }
  const { sx, sy } = rendered.markerScreen;
  return rendered.curveSegments.map((segments) => distanceToSegments(sx, sy, segments));
}

export function paint(ctx: CanvasRenderingContext2D, rendered: RenderedScene, viewport: Viewport): void {
  for (const command of rendered.commands) {
    switch (command.kind) {
      case "clear":
        ctx.fillStyle = "#fdfdf8";
        ctx.fillRect(0, 0, viewport.width, viewport.height);
        break;
      case "segments":
        ctx.strokeStyle = command.color;
        ctx.lineWidth = command.width;
        ctx.beginPath();
        for (const [x1, y1, x2, y2] of command.segments) {
          ctx.moveTo(x1, y1);
          ctx.lineTo(x2, y2);
        }
        ctx.stroke();
        break;
      case "handle":
        ctx.beginPath();
        ctx.arc(command.sx, command.sy, 7, 0, 2 * Math.PI);
        ctx.fillStyle = command.warned ? "#d33" : "#fff";
        ctx.fill();
        ctx.strokeStyle = "#222";
        ctx.lineWidth = 1.5;
        ctx.stroke();
        ctx.fillStyle = "#222";
        ctx.font = "10px sans-serif";
        ctx.textAlign = "center";
        ctx.textBaseline = "middle";
        ctx.fillText(command.label, command.sx, command.sy);
        break;
      case "marker":
        ctx.beginPath();
        ctx.arc(command.sx, command.sy, 5, 0, 2 * Math.PI);
        ctx.fillStyle = "#06c";
        ctx.fill();
        ctx.beginPath();
        ctx.arc(command.sx, command.sy, 9, 0, 2 * Math.PI);
        ctx.strokeStyle = "#06c";
        ctx.lineWidth = 1;
        ctx.stroke();
        break;
      case "banner":
        ctx.fillStyle = "rgba(180, 40, 40, 0.92)";
        ctx.fillRect(8, 8 + command.row * 26, viewport.width - 16, 22);
        ctx.fillStyle = "#fff";
        ctx.font = "12px sans-serif";
        ctx.textAlign = "left";
        ctx.textBaseline = "middle";
        ctx.fillText(command.text, 14, 19 + command.row * 26);
        break;
    }
  }
}
