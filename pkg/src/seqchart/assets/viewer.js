"use strict";
(() => {
  // src/transform.ts
  var IDENTITY = { scale: 1, tx: 0, ty: 0 };
  var MIN_SCALE = 0.1;
  var MAX_SCALE = 50;
  function clampScale(scale) {
    return Math.min(MAX_SCALE, Math.max(MIN_SCALE, scale));
  }
  function zoomAbout(point, factor, t) {
    const scale = clampScale(t.scale * factor);
    const ratio = scale / t.scale;
    return {
      scale,
      tx: point.x - ratio * (point.x - t.tx),
      ty: point.y - ratio * (point.y - t.ty)
    };
  }
  function panBy(dx, dy, t) {
    return { scale: t.scale, tx: t.tx + dx, ty: t.ty + dy };
  }
  function toSvgAttribute(t) {
    return `translate(${t.tx} ${t.ty}) scale(${t.scale})`;
  }

  // src/viewer.ts
  var WHEEL_SENSITIVITY = 15e-4;
  function parseViewBox(svg) {
    const raw = svg.getAttribute("viewBox") ?? "0 0 0 0";
    const parts = raw.split(/\s+/).map(Number);
    return [parts[0] ?? 0, parts[1] ?? 0, parts[2] ?? 0, parts[3] ?? 0];
  }
  function renderLabel(target, label) {
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
  function init(root) {
    const svg = root.querySelector("svg[data-chart-root]");
    const layer = svg?.querySelector("g.chart-layer") ?? null;
    const readout = root.querySelector(".chart-readout");
    if (!svg || !layer) return null;
    let transform = IDENTITY;
    const [vbX, vbY, vbW, vbH] = parseViewBox(svg);
    const apply = () => {
      layer.setAttribute("transform", toSvgAttribute(transform));
    };
    const clientToSvg = (clientX, clientY) => {
      const rect = svg.getBoundingClientRect();
      const sx = rect.width > 0 ? vbW / rect.width : 1;
      const sy = rect.height > 0 ? vbH / rect.height : 1;
      return {
        x: (clientX - rect.left) * sx + vbX,
        y: (clientY - rect.top) * sy + vbY
      };
    };
    const viewer = {
      get transform() {
        return transform;
      },
      set transform(t) {
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
      }
    };
    svg.addEventListener(
      "wheel",
      (e) => {
        e.preventDefault();
        const factor = Math.exp(-e.deltaY * WHEEL_SENSITIVITY);
        viewer.zoomAt(clientToSvg(e.clientX, e.clientY), factor);
      },
      { passive: false }
    );
    let dragging = null;
    svg.addEventListener("pointerdown", (e) => {
      dragging = clientToSvg(e.clientX, e.clientY);
    });
    svg.addEventListener("pointermove", (e) => {
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
    svg.addEventListener("mouseover", (e) => {
      const target = e.target;
      if (target?.matches?.("circle[data-node-id]")) viewer.showNode(target);
    });
    svg.addEventListener("mouseout", (e) => {
      const target = e.target;
      if (target?.matches?.("circle[data-node-id]")) viewer.hideReadout();
    });
    return viewer;
  }

  // src/main.ts
  function start() {
    init(document);
  }
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", start);
  } else {
    start();
  }
})();
