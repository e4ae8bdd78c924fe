/**
 * Pure view-transform math for the chart layer.
 *
 * The transform maps chart-layer coordinates c to screen coordinates p via
 * p = scale * c + t.  Interactivity only ever rewrites this single group
 * transform; SVG element geometry is never touched.
 */

export interface ViewTransform {
  scale: number;
  tx: number;
  ty: number;
}

export interface Point {
  x: number;
  y: number;
}

export const IDENTITY: ViewTransform = { scale: 1, tx: 0, ty: 0 };

export const MIN_SCALE = 0.1;
export const MAX_SCALE = 50;

export function clampScale(scale: number): number {
  return Math.min(MAX_SCALE, Math.max(MIN_SCALE, scale));
}

/** Chart-layer point currently displayed under a screen point. */
export function toLayerPoint(t: ViewTransform, p: Point): Point {
  return { x: (p.x - t.tx) / t.scale, y: (p.y - t.ty) / t.scale };
}

/**
 * Zoom by `factor` keeping the layer point under `point` fixed on screen.
 *
 * Solving p = s' * c + t' for the cursor's layer point c gives
 * t' = p - (s' / s) * (p - t).
 */
export function zoomAbout(
  point: Point,
  factor: number,
  t: ViewTransform,
): ViewTransform {
  const scale = clampScale(t.scale * factor);
  const ratio = scale / t.scale;
  return {
    scale,
    tx: point.x - ratio * (point.x - t.tx),
    ty: point.y - ratio * (point.y - t.ty),
  };
}

export function panBy(dx: number, dy: number, t: ViewTransform): ViewTransform {
  return { scale: t.scale, tx: t.tx + dx, ty: t.ty + dy };
}

export function toSvgAttribute(t: ViewTransform): string {
  return `translate(${t.tx} ${t.ty}) scale(${t.scale})`;
}
