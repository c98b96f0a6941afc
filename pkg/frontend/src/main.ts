/** DOM wiring: canvas events, method selector, the compute loop. */

import { ComputeResponse, Method, postCompute } from "./api.js";
import { LatestRequestScheduler } from "./scheduler.js";
import {
  SceneState,
  applyDrag,
  applyResponse,
  applyServiceError,
  initialScene,
  paint,
  renderScene,
  setMethod,
  toComputeRequest,
} from "./scene.js";
import { defaultViewport, screenToWorld, worldToScreen } from "./view.js";

const SERVICE_URL = (window as { NINTHPOINT_SERVICE__?: string }).NINTHPOINT_SERVICE__
  ?? `http://${location.hostname || "127.0.0.1"}:8439`;

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const methodSelect = document.getElementById("method") as HTMLSelectElement;
const statusLine = document.getElementById("status") as HTMLElement;

let state: SceneState = initialScene();
let viewport = defaultViewport(canvas.width, canvas.height);

function redraw(): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  paint(ctx, renderScene(state, viewport), viewport);
}

const scheduler = new LatestRequestScheduler<SceneState, ComputeResponse>(
  (snapshot) => postCompute(SERVICE_URL, toComputeRequest(snapshot)),
  (response) => {
    state = applyResponse(state, response.result);
    statusLine.textContent = response.result.p9
      ? `ninth point in ${response.meta.timing_ms} ms (${response.result.method_used ?? response.result.method})`
      : "no ninth point for this configuration";
    redraw();
  },
  (error) => {
    state = applyServiceError(state, error instanceof Error ? error.message : String(error));
    statusLine.textContent = "service unreachable";
    redraw();
  },
);

function recompute(): void {
  scheduler.submit(state);
}

// --- dragging --------------------------------------------------------------

let dragging: number | null = null;

function canvasPosition(event: PointerEvent): { sx: number; sy: number } {
  const rect = canvas.getBoundingClientRect();
  return {
    sx: ((event.clientX - rect.left) / rect.width) * canvas.width,
    sy: ((event.clientY - rect.top) / rect.height) * canvas.height,
  };
}

canvas.addEventListener("pointerdown", (event) => {
  const { sx, sy } = canvasPosition(event);
  for (let i = 0; i < 8; i++) {
    const p = state.points[i]!;
    const s = worldToScreen(viewport, p.x, p.y);
    if (Math.hypot(s.sx - sx, s.sy - sy) <= 12) {
      dragging = i + 1;
      canvas.setPointerCapture(event.pointerId);
      return;
    }
  }
});

canvas.addEventListener("pointermove", (event) => {
  if (dragging === null) {
    return;
  }
  const { sx, sy } = canvasPosition(event);
  const { x, y } = screenToWorld(viewport, sx, sy);
  state = applyDrag(state, dragging, x, y);
  redraw();
  recompute();
});

canvas.addEventListener("pointerup", () => {
  dragging = null;
  recompute(); // the final position always goes out
});

methodSelect.addEventListener("change", () => {
  state = setMethod(state, methodSelect.value as Method);
  recompute();
});

window.addEventListener("resize", () => {
  // canvas is fixed-size here; a real resize would rebuild the viewport
  viewport = defaultViewport(canvas.width, canvas.height);
  redraw();
});

redraw();
recompute();
