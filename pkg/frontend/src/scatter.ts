/** Scatter-plot geometry: fit map coordinates to a canvas and hit-test. */

import type { MapPoint } from "./types.js";

export interface ScreenPoint extends MapPoint {
  sx: number;
  sy: number;
}

export const PALETTE = [
  "#1f77b4",
  "#ff7f0e",
  "#2ca02c",
  "#d62728",
  "#9467bd",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
  "#aec7e8",
  "#ffbb78",
] as const;

export function clusterColor(cluster: number): string {
  const color = PALETTE[((cluster % PALETTE.length) + PALETTE.length) % PALETTE.length];
  return color ?? PALETTE[0];
}

/** Scale points into [margin, width-margin] x [margin, height-margin]. */
export function layout(
  points: readonly MapPoint[],
  width: number,
  height: number,
  margin = 24,
): ScreenPoint[] {
  if (points.length === 0) return [];
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const innerW = width - 2 * margin;
  const innerH = height - 2 * margin;
  return points.map((p) => ({
    ...p,
    sx: margin + ((p.x - minX) / spanX) * innerW,
    // Canvas y grows downward; flip so larger map-y is higher on screen.
    sy: margin + ((maxY - p.y) / spanY) * innerH,
  }));
}

/** Closest point within `radius` pixels, or null. */
export function nearest(
  points: readonly ScreenPoint[],
  sx: number,
  sy: number,
  radius = 10,
): ScreenPoint | null {
  let best: ScreenPoint | null = null;
  let bestSq = radius * radius;
  for (const p of points) {
    const dx = p.sx - sx;
    const dy = p.sy - sy;
    const sq = dx * dx + dy * dy;
    if (sq <= bestSq) {
      bestSq = sq;
      best = p;
    }
  }
  return best;
}

export function draw(
  ctx: CanvasRenderingContext2D,
  points: readonly ScreenPoint[],
  hovered: ScreenPoint | null = null,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  for (const p of points) {
    ctx.beginPath();
    ctx.fillStyle = clusterColor(p.cluster);
    ctx.arc(p.sx, p.sy, p === hovered ? 6 : 3.5, 0, 2 * Math.PI);
    ctx.fill();
  }
  if (hovered) {
    ctx.font = "13px system-ui, sans-serif";
    ctx.fillStyle = "#111";
    ctx.fillText(hovered.word, hovered.sx + 8, hovered.sy - 8);
  }
}
