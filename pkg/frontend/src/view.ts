/** World <-> screen mapping: a centered, y-up world window on a y-down canvas. */

export interface Viewport {
  width: number;   // canvas pixels
  height: number;
  centerX: number; // world coordinates
  centerY: number;
  worldPerPixel: number;
}

export function defaultViewport(width: number, height: number): Viewport {
  return { width, height, centerX: 0, centerY: 0, worldPerPixel: 14 / Math.min(width, height) };
}

export function worldToScreen(v: Viewport, x: number, y: number): { sx: number; sy: number } {
  return {
    sx: v.width / 2 + (x - v.centerX) / v.worldPerPixel,
    sy: v.height / 2 - (y - v.centerY) / v.worldPerPixel,
  };
}

export function screenToWorld(v: Viewport, sx: number, sy: number): { x: number; y: number } {
  return {
    x: v.centerX + (sx - v.width / 2) * v.worldPerPixel,
    y: v.centerY - (sy - v.height / 2) * v.worldPerPixel,
  };
}

export function visibleWindow(v: Viewport) {
  const halfW = (v.width / 2) * v.worldPerPixel;
  const halfH = (v.height / 2) * v.worldPerPixel;
  return {
    xMin: v.centerX - halfW,
    xMax: v.centerX + halfW,
    yMin: v.centerY - halfH,
    yMax: v.centerY + halfH,
  };
}
