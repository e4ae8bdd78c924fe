"""Small helpers for inspecting rendered SVG/HTML in tests."""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET

SVG_NS = "{http://www.w3.org/2000/svg}"

GEOMETRY_ATTRS = (
    "viewBox", "width", "height", "x", "y", "x1", "y1", "x2", "y2",
    "cx", "cy", "r", "stroke-dasharray", "stroke-width",
)


def extract_svg(html: str) -> str:
    start = html.index("<svg")
    end = html.index("</svg>") + len("</svg>")
    return html[start:end]


def parse_svg(svg_text: str) -> ET.Element:
    return ET.fromstring(svg_text)


def find_group(root: ET.Element, css_class: str) -> ET.Element:
    for g in root.iter(f"{SVG_NS}g"):
        if g.get("class") == css_class:
            return g
    raise AssertionError(f"no <g class={css_class!r}> in SVG")


def node_circles(svg_text: str) -> list[ET.Element]:
    root = parse_svg(svg_text)
    return list(find_group(root, "nodes").iter(f"{SVG_NS}circle"))


def edge_lines(svg_text: str) -> list[ET.Element]:
    root = parse_svg(svg_text)
    return list(find_group(root, "edges").iter(f"{SVG_NS}line"))


def grid_lines(svg_text: str) -> list[ET.Element]:
    root = parse_svg(svg_text)
    return list(find_group(root, "gridlines").iter(f"{SVG_NS}line"))


def geometry_signature(svg_text: str) -> list[tuple[str, tuple[tuple[str, str], ...]]]:
    """Tag sequence with geometry attributes only; colors excluded."""
    root = parse_svg(svg_text)
    sig = []
    for el in root.iter():
        attrs = tuple(
            (k, v) for k, v in sorted(el.attrib.items()) if k in GEOMETRY_ATTRS
        )
        sig.append((el.tag, attrs))
    return sig


def html_title(html: str) -> str:
    m = re.search(r"<title>(.*?)</title>", html, re.S)
    assert m, "no <title> in HTML"
    return m.group(1)


def external_urls(html: str) -> list[str]:
    return re.findall(r'(?:href|src)="(https?://[^"]+)"', html)
