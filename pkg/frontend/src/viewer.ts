/**
 * Chart viewer runtime: wheel zoom about the cursor, drag pan, and a hover
 * readout showing the hovered node's chart coordinates and typeset label.
 *
 * Consumes the attribute contract of the generated SVG: the chart root
 * carries `data-chart-root`, the pannable group is `g.chart-layer`, node
 * circles carry `data-node-id`, `data-label`, `data-x`, `data-y`, and the
 * readout element is `.chart-readout`.  Never throws on missing elements,
 * and falls back to raw label text when KaTeX is unavailable.
 */

import {
  IDENTITY,
  Point,
  ViewTransform,
  panBy,
  toSvgAttribute,
  zoomAbout,
} from "./transform";

const WHEEL_SENSITIVITY = 0.0015;

interface KatexLike {
  render(tex: string, el: HTMLElement, opts?: object): void;
}

declare global {
  interface Window {
    katex?: KatexLike;
  }
}

export interface Viewer {
  transform: ViewTransform;
  /** Screen (client) coordinates to SVG viewBox coordinates. */
  clientToSvg(clientX: number, clientY: number): Point;
  zoomAt(point: Point, factor: number): void;
  panBy(dx: number, dy: number): void;
  showNode(circle: Element): void;
  hideReadout(): void;
}

function parseViewBox(svg: SVGSVGElement): [number, number, number, number] {
  const raw = svg.getAttribute("viewBox") ?? "0 0 0 0";
  const parts = raw.split(/\s+/).map(Number);
  return [parts[0] ?? 0, parts[1] ?? 0, parts[2] ?? 0, parts[3] ?? 0];
}

function renderLabel(target: HTMLElement, label: string): void {
  target.textContent = "";
  if (!label) return;
  const span = target.ownerDocument.createElement("span");
  const tex = label.replace(/\$/g, "");
  const katex = target.ownerDocument.defaultView?.katex;
  if (katex) {
    try {
      katex.render(tex, span, { throwOnError: false });
    } catch {
      span.textContent = label;
    }
  } else {
    span.textContent = label;
  }
  target.appendChild(span);
}

export function init(root: Document): Viewer | null {
  const svg = root.querySelector<SVGSVGElement>("svg[data-chart-root]");
  const layer = svg?.querySelector<SVGGElement>("g.chart-layer") ?? null;
  const readout = root.querySelector<HTMLElement>(".chart-readout");
  if (!svg || !layer) return null;

  let transform = IDENTITY;
  const [vbX, vbY, vbW, vbH] = parseViewBox(svg);

  const apply = () => {
    layer.setAttribute("transform", toSvgAttribute(transform));
  };

  const clientToSvg = (clientX: number, clientY: number): Point => {
    const rect = svg.getBoundingClientRect();
    // headless DOMs report zero-size rects; fall back to a 1:1 mapping
    const sx = rect.width > 0 ? vbW / rect.width : 1;
    const sy = rect.height > 0 ? vbH / rect.height : 1;
    return {
      x: (clientX - rect.left) * sx + vbX,
      y: (clientY - rect.top) * sy + vbY,
    };
  };

  const viewer: Viewer = {
    get transform() {
      return transform;
    },
    set transform(t: ViewTransform) {
      transform = t;
      apply();
    },
    clientToSvg,
    zoomAt(point, factor) {
      transform = zoomAbout(point, factor, transform);
      apply();
    },
    panBy(dx, dy) {
      transform = panBy(dx, dy, transform);
      apply();
    },
    showNode(circle) {
      if (!readout) return;
      const x = circle.getAttribute("data-x") ?? "?";
      const y = circle.getAttribute("data-y") ?? "?";
      const label = circle.getAttribute("data-label") ?? "";
      readout.textContent = "";
      const coords = root.createElement("span");
      coords.className = "readout-coords";
      coords.textContent = `(${x}, ${y})`;
      readout.appendChild(coords);
      const labelEl = root.createElement("span");
      labelEl.className = "readout-label";
      renderLabel(labelEl, label);
      if (label) {
        readout.appendChild(root.createTextNode("  "));
        readout.appendChild(labelEl);
      }
      readout.hidden = false;
    },
    hideReadout() {
      if (readout) readout.hidden = true;
    },
  };

  svg.addEventListener(
    "wheel",
    (e: WheelEvent) => {
      e.preventDefault();
      const factor = Math.exp(-e.deltaY * WHEEL_SENSITIVITY);
      viewer.zoomAt(clientToSvg(e.clientX, e.clientY), factor);
    },
    { passive: false },
  );

  let dragging: Point | null = null;
  svg.addEventListener("pointerdown", (e: PointerEvent) => {
    dragging = clientToSvg(e.clientX, e.clientY);
  });
  svg.addEventListener("pointermove", (e: PointerEvent) => {
    if (!dragging) return;
    const p = clientToSvg(e.clientX, e.clientY);
    viewer.panBy(p.x - dragging.x, p.y - dragging.y);
    dragging = p;
  });
  const stopDrag = () => {
    dragging = null;
  };
  svg.addEventListener("pointerup", stopDrag);
  svg.addEventListener("pointerleave", stopDrag);

  svg.addEventListener("mouseover", (e: Event) => {
    const target = e.target as Element | null;
    if (target?.matches?.("circle[data-node-id]")) viewer.showNode(target);
  });
  svg.addEventListener("mouseout", (e: Event) => {
    const target = e.target as Element | null;
    if (target?.matches?.("circle[data-node-id]")) viewer.hideReadout();
  });

  return viewer;
}
