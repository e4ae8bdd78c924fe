"""SVG and self-contained HTML output.

All text generation is byte-deterministic: fixed attribute order and a fixed
number format (shortest exact decimal, never exponent notation), so golden
files are stable across platforms.  Math in labels is never interpreted
here; label source text travels untouched in data attributes and is typeset
client-side by KaTeX loaded from a CDN (the generated page's only network
dependency).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from decimal import Decimal
from importlib import resources

from .layout import LayoutConfig, LayoutResult
from .model import ChartDocument

__all__ = [
    "RenderOptions",
    "Theme",
    "LIGHT_THEME",
    "DARK_THEME",
    "RenderError",
    "render_svg",
    "emit_html",
    "strip_math_delimiters",
    "render_document",
]

log = logging.getLogger(__name__)

KATEX_CSS_URL = "https://cdn.jsdelivr.net/npm/katex@0.16.11/dist/katex.min.css"
KATEX_JS_URL = "https://cdn.jsdelivr.net/npm/katex@0.16.11/dist/katex.min.js"

DASH_PATTERNS = {"dashed": "6 4", "dotted": "1.5 3"}

VIEWER_ASSET = "viewer.js"


class RenderError(RuntimeError):
    pass


@dataclass(frozen=True)
class Theme:
    name: str
    background: str
    foreground: str
    gridline: str
    axis_text: str


LIGHT_THEME = Theme(
    name="light",
    background="#ffffff",
    foreground="#1a1a1a",
    gridline="#d9d9d9",
    axis_text="#555555",
)

DARK_THEME = Theme(
    name="dark",
    background="#1e1e1e",
    foreground="#e6e6e6",
    gridline="#3a3a3a",
    axis_text="#9a9a9a",
)


@dataclass(frozen=True)
class RenderOptions:
    theme: Theme = LIGHT_THEME
    title_override: str | None = None
    layout: LayoutConfig = field(default_factory=LayoutConfig)
    include_viewer: bool = True


def fmt_num(value: float) -> str:
    """Shortest decimal that round-trips, without exponent notation."""
    if float(value) == int(value):
        return str(int(value))
    s = repr(float(value))
    if "e" in s or "E" in s:
        s = format(Decimal(s), "f")
    return s


def xml_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def element_id(node_id: str) -> str:
    """Stable, XML-safe element id derived from a node id."""
    safe = re.sub(
        r"[^A-Za-z0-9_-]",
        lambda m: "_x{:02x}_".format(ord(m.group(0)) & 0xFF),
        node_id,
    )
    return f"node-{safe}"


def strip_math_delimiters(label: str) -> str:
    """Drop ``$`` delimiters for plain-text contexts; idempotent.

    Unbalanced delimiters leave the text unchanged (with a logged warning)
    rather than guessing at intent.
    """
    if label.count("$") % 2 != 0:
        log.warning("unbalanced math delimiters in %r; leaving unchanged", label)
        return label
    return label.replace("$", "")


def render_svg(layout: LayoutResult, doc: ChartDocument,
               opts: RenderOptions) -> str:
    """One ``<svg>`` element: background, grid, ticks, edges, then nodes.

    Nodes paint last so segments visually terminate at the dots.  Each node
    circle carries a stable id plus ``data-node-id``, ``data-label``,
    ``data-x`` and ``data-y`` attributes; this is the contract the embedded
    viewer script consumes.
    """
    theme = opts.theme
    vb = layout.view_box
    vb_str = (f"{fmt_num(vb.x)} {fmt_num(vb.y)} "
              f"{fmt_num(vb.width)} {fmt_num(vb.height)}")
    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb_str}" '
        f'width="{fmt_num(vb.width)}" height="{fmt_num(vb.height)}" '
        f'class="chart theme-{theme.name}" data-chart-root="1">'
    )
    out.append(
        f'  <rect class="chart-bg" x="{fmt_num(vb.x)}" y="{fmt_num(vb.y)}" '
        f'width="{fmt_num(vb.width)}" height="{fmt_num(vb.height)}" '
        f'fill="{xml_escape(theme.background)}"/>'
    )
    out.append('  <g class="chart-layer">')

    out.append('    <g class="gridlines">')
    for gl in layout.grid_lines:
        out.append(
            f'      <line x1="{fmt_num(gl.x1)}" y1="{fmt_num(gl.y1)}" '
            f'x2="{fmt_num(gl.x2)}" y2="{fmt_num(gl.y2)}" '
            f'stroke="{xml_escape(theme.gridline)}" stroke-width="1"/>'
        )
    out.append("    </g>")

    out.append('    <g class="axis-ticks">')
    for tick in layout.axis_ticks:
        out.append(
            f'      <text x="{fmt_num(tick.x)}" y="{fmt_num(tick.y)}" '
            f'text-anchor="middle" dominant-baseline="middle" '
            f'font-size="12" fill="{xml_escape(theme.axis_text)}" '
            f'data-axis="{tick.axis}">{xml_escape(tick.text)}</text>'
        )
    out.append("    </g>")

    out.append('    <g class="edges">')
    for pe in layout.placed_edges:
        stroke = pe.spec.color if pe.spec.color is not None else theme.foreground
        dash = DASH_PATTERNS.get(pe.spec.line_style)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'      <line x1="{fmt_num(pe.x1)}" y1="{fmt_num(pe.y1)}" '
            f'x2="{fmt_num(pe.x2)}" y2="{fmt_num(pe.y2)}" '
            f'stroke="{xml_escape(stroke)}" stroke-width="1.5"{dash_attr}/>'
        )
    out.append("    </g>")

    out.append('    <g class="nodes">')
    for pn in layout.placed_nodes:
        fill = pn.spec.color if pn.spec.color is not None else theme.foreground
        out.append(
            f'      <circle id="{element_id(pn.id)}" '
            f'cx="{fmt_num(pn.cx)}" cy="{fmt_num(pn.cy)}" '
            f'r="{fmt_num(layout.node_radius)}" fill="{xml_escape(fill)}" '
            f'data-node-id="{xml_escape(pn.id)}" '
            f'data-label="{xml_escape(pn.spec.label)}" '
            f'data-x="{fmt_num(pn.spec.x)}" data-y="{fmt_num(pn.spec.y)}"/>'
        )
    out.append("    </g>")

    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def load_viewer_bundle() -> str:
    """Built viewer runtime, embedded verbatim into generated pages."""
    asset = resources.files("seqchart") / "assets" / VIEWER_ASSET
    if not asset.is_file():
        raise RenderError(
            "viewer bundle not found: build the frontend (npm run build in "
            "frontend/, which installs the bundle into seqchart/assets/"
            f"{VIEWER_ASSET}) or render with the viewer disabled"
        )
    return asset.read_text(encoding="utf-8")


_PAGE_CSS = """\
body {{ margin: 0; font-family: sans-serif;
       background: {background}; color: {foreground}; }}
main.chart-page {{ padding: 1rem; }}
h1.chart-title {{ font-size: 1.2rem; font-weight: 600; margin: 0 0 0.75rem; }}
.chart-wrap {{ position: relative; display: inline-block; }}
.chart-readout {{ position: absolute; right: 8px; top: 8px;
  background: {background}; color: {foreground};
  border: 1px solid {gridline}; border-radius: 4px;
  padding: 4px 8px; font-size: 0.9rem; pointer-events: none; }}
"""


def emit_html(svg_text: str, doc: ChartDocument, opts: RenderOptions) -> str:
    """Wrap an SVG fragment into one self-contained interactive HTML page.

    The only network references are the KaTeX stylesheet and script; the
    viewer runtime and theme styling are inlined.  With the viewer disabled
    the output is valid static HTML with no script.
    """
    theme = opts.theme
    raw_title = (opts.title_override if opts.title_override is not None
                 else doc.header.metadata.title)
    title = strip_math_delimiters(raw_title)

    viewer_js = load_viewer_bundle() if opts.include_viewer else None

    out: list[str] = []
    out.append("<!doctype html>")
    out.append('<html lang="en">')
    out.append("<head>")
    out.append('<meta charset="utf-8"/>')
    out.append('<meta name="viewport" content="width=device-width, '
               'initial-scale=1"/>')
    out.append(f"<title>{xml_escape(title)}</title>")
    out.append(f'<link rel="stylesheet" href="{KATEX_CSS_URL}"/>')
    out.append(f'<script defer src="{KATEX_JS_URL}"></script>')
    out.append("<style>")
    out.append(_PAGE_CSS.format(
        background=theme.background,
        foreground=theme.foreground,
        gridline=theme.gridline,
    ))
    out.append("</style>")
    out.append("</head>")
    out.append(f'<body class="theme-{theme.name}">')
    out.append('<main class="chart-page">')
    if title:
        out.append(f'<h1 class="chart-title">{xml_escape(title)}</h1>')
    out.append('<div class="chart-wrap">')
    out.append(svg_text.rstrip("\n"))
    out.append('<div class="chart-readout" hidden></div>')
    out.append("</div>")
    out.append("</main>")
    if viewer_js is not None:
        out.append("<script>")
        out.append(viewer_js.rstrip("\n"))
        out.append("</script>")
    out.append("</body>")
    out.append("</html>")
    return "\n".join(out) + "\n"


def render_document(doc: ChartDocument,
                    opts: RenderOptions | None = None) -> str:
    """Layout, render, and wrap in one call."""
    from .layout import layout_document

    opts = opts or RenderOptions()
    layout = layout_document(doc, opts.layout)
    svg = render_svg(layout, doc, opts)
    return emit_html(svg, doc, opts)
