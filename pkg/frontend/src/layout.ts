export interface Point {
  x: number;
  y: number;
}

/**
 * Fixed circular layout: vertex i sits at angle -pi/2 + 2 pi i / n on a
 * circle centered in the canvas.  Deliberately not a force simulation, so
 * the picture before and after a mutation lines up vertex by vertex.
 * Overrides hold positions the user dragged somewhere else.
 */
export function circularLayout(
  n: number,
  width: number,
  height: number,
  overrides?: ReadonlyMap<number, Point>,
): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const r = 0.38 * Math.min(width, height);
  const out: Point[] = [];
  for (let i = 0; i < n; i++) {
    const dragged = overrides?.get(i);
    if (dragged) {
      out.push({ x: dragged.x, y: dragged.y });
      continue;
    }
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / Math.max(n, 1);
    out.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return out;
}

/** New override map with one vertex pinned to a dragged position. */
export function withOverride(
  overrides: ReadonlyMap<number, Point>,
  vertex: number,
  p: Point,
): Map<number, Point> {
  const next = new Map(overrides);
  next.set(vertex, p);
  return next;
}
