"""Chart document model: parsing, validation, and canonical serialization.

A chart document is a JSON object with three top-level keys:

* ``header`` -- metadata (title) and chart bounds (integer min/max windows
  for each axis),
* ``nodes`` -- an object mapping node ids to positioned, optionally labeled
  and styled dots,
* ``edges`` -- an array of styled relations between pairs of node ids.

Parsing is strict about shape (wrong types are parse errors) but lenient
about content: referential problems, bad ranges, and suspicious coordinates
are reported by :func:`validate`, never by :func:`parse_document`.  Unknown
keys are preserved as paths at parse time and surface as warnings during
validation, so future schema extensions stay forward-compatible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

__all__ = [
    "ParseError",
    "Range",
    "ChartConfig",
    "Metadata",
    "Header",
    "NodeSpec",
    "EdgeSpec",
    "Finding",
    "ValidationReport",
    "ChartDocument",
    "LINE_STYLES",
    "parse_document",
    "validate",
    "serialize_document",
]

LINE_STYLES = ("solid", "dashed", "dotted")


class ParseError(ValueError):
    """Raised when input text cannot be turned into a typed document."""


@dataclass(frozen=True)
class Range:
    min: int
    max: int


@dataclass(frozen=True)
class ChartConfig:
    width: Range
    height: Range


@dataclass(frozen=True)
class Metadata:
    title: str = ""


@dataclass(frozen=True)
class Header:
    metadata: Metadata = Metadata()
    chart: ChartConfig = ChartConfig(Range(0, 0), Range(0, 0))


@dataclass(frozen=True)
class NodeSpec:
    x: float
    y: float
    label: str = ""
    color: str | None = None
    absolute: bool = False


@dataclass(frozen=True)
class EdgeSpec:
    source: str
    target: str
    color: str | None = None
    line_style: str = "solid"


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" | "warning"
    json_path: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity.upper()} {self.json_path}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    entries: tuple[Finding, ...] = ()

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(e for e in self.entries if e.severity == "error")

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(e for e in self.entries if e.severity == "warning")

    @property
    def ok(self) -> bool:
        """True when the document is renderable (warnings allowed)."""
        return not self.errors


@dataclass(frozen=True)
class ChartDocument:
    header: Header
    nodes: dict[str, NodeSpec]
    edges: tuple[EdgeSpec, ...]
    # Paths of unrecognized keys seen while parsing.  Not part of document
    # identity: serialization drops them, so round trips ignore them too.
    unknown_keys: tuple[str, ...] = field(default=(), compare=False)


# ---------------------------------------------------------------------------
# parsing


def _reject_duplicate_keys(pairs: list[tuple[str, object]]) -> dict[str, object]:
    obj: dict[str, object] = {}
    for key, value in pairs:
        if key in obj:
            raise ParseError(f"duplicate key {key!r} in object")
        obj[key] = value
    return obj


def _require_object(value: object, path: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _get_str(obj: dict, key: str, path: str, default: str = "") -> str:
    value = obj.get(key, default)
    if not isinstance(value, str):
        raise ParseError(f"{path}.{key}: expected a string")
    return value


def _get_number(obj: dict, key: str, path: str) -> float:
    if key not in obj:
        raise ParseError(f"{path}: missing required key {key!r}")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{path}.{key}: expected a number")
    return value


def _get_int(obj: dict, key: str, path: str) -> int:
    value = _get_number(obj, key, path)
    if value != int(value):
        raise ParseError(f"{path}.{key}: expected an integer")
    return int(value)


def _collect_unknown(obj: dict, known: tuple[str, ...], path: str,
                     out: list[str]) -> None:
    for key in obj:
        if key not in known:
            out.append(f"{path}.{key}" if path else key)


def _parse_range(value: object, path: str, unknown: list[str]) -> Range:
    obj = _require_object(value, path)
    rng = Range(_get_int(obj, "min", path), _get_int(obj, "max", path))
    _collect_unknown(obj, ("min", "max"), path, unknown)
    return rng


def _parse_node(node_id: str, value: object, unknown: list[str]) -> NodeSpec:
    path = f"nodes.{node_id}"
    obj = _require_object(value, path)
    x = _get_number(obj, "x", path)
    y = _get_number(obj, "y", path)
    absolute = obj.get("absolute", False)
    if not isinstance(absolute, bool):
        raise ParseError(f"{path}.absolute: expected a boolean")
    color = obj.get("color")
    if color is not None and not isinstance(color, str):
        raise ParseError(f"{path}.color: expected a string")
    spec = NodeSpec(
        x=x,
        y=y,
        label=_get_str(obj, "label", path),
        color=color,
        absolute=absolute,
    )
    _collect_unknown(obj, ("x", "y", "label", "color", "absolute"), path, unknown)
    return spec


def _parse_edge(index: int, value: object, unknown: list[str]) -> EdgeSpec:
    path = f"edges[{index}]"
    obj = _require_object(value, path)
    for key in ("source", "target"):
        if key not in obj or not isinstance(obj[key], str):
            raise ParseError(f"{path}.{key}: expected a string node id")
    color = obj.get("color")
    if color is not None and not isinstance(color, str):
        raise ParseError(f"{path}.color: expected a string")
    line_style = obj.get("lineStyle", "solid")
    if line_style not in LINE_STYLES:
        raise ParseError(
            f"{path}.lineStyle: expected one of {', '.join(LINE_STYLES)}"
        )
    edge = EdgeSpec(
        source=obj["source"],
        target=obj["target"],
        color=color,
        line_style=line_style,
    )
    _collect_unknown(obj, ("source", "target", "color", "lineStyle"), path, unknown)
    return edge


def parse_document(text: str) -> ChartDocument:
    """Parse chart JSON text into a typed document with defaults filled in.

    Raises :class:`ParseError` on malformed JSON (with line/column), on
    structural type mismatches (with the offending JSON path), and on
    duplicate object keys.  Node and edge order follows the source text.
    """
    try:
        raw = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except ParseError:
        raise
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc

    if not isinstance(raw, dict):
        raise ParseError("top level: expected an object")

    unknown: list[str] = []
    _collect_unknown(raw, ("header", "nodes", "edges"), "", unknown)

    header_obj = _require_object(raw.get("header", {}), "header")
    _collect_unknown(header_obj, ("metadata", "chart"), "header", unknown)

    meta_obj = _require_object(header_obj.get("metadata", {}), "header.metadata")
    _collect_unknown(meta_obj, ("title",), "header.metadata", unknown)
    metadata = Metadata(title=_get_str(meta_obj, "title", "header.metadata"))

    chart_obj = _require_object(header_obj.get("chart", {}), "header.chart")
    _collect_unknown(chart_obj, ("width", "height"), "header.chart", unknown)
    chart = ChartConfig(
        width=_parse_range(chart_obj.get("width", {"min": 0, "max": 0}),
                           "header.chart.width", unknown),
        height=_parse_range(chart_obj.get("height", {"min": 0, "max": 0}),
                            "header.chart.height", unknown),
    )

    nodes_obj = raw.get("nodes", {})
    if not isinstance(nodes_obj, dict):
        raise ParseError("nodes: expected an object")
    nodes = {
        node_id: _parse_node(node_id, value, unknown)
        for node_id, value in nodes_obj.items()
    }

    edges_raw = raw.get("edges", [])
    if not isinstance(edges_raw, list):
        raise ParseError("edges: expected an array")
    edges = tuple(
        _parse_edge(i, value, unknown) for i, value in enumerate(edges_raw)
    )

    return ChartDocument(
        header=Header(metadata=metadata, chart=chart),
        nodes=nodes,
        edges=edges,
        unknown_keys=tuple(unknown),
    )


# ---------------------------------------------------------------------------
# validation


def _is_integral(value: float) -> bool:
    return float(value) == int(value)


def validate(doc: ChartDocument) -> ValidationReport:
    """Check structural and referential integrity; findings, never raises.

    Finding order is deterministic: chart-bound errors first, then node
    findings in document order, then edge findings in document order, then
    unknown-key warnings in discovery order.
    """
    findings: list[Finding] = []
    chart = doc.header.chart

    for axis in ("width", "height"):
        rng: Range = getattr(chart, axis)
        if rng.min > rng.max:
            findings.append(Finding(
                "error",
                f"header.chart.{axis}",
                f"min {rng.min} exceeds max {rng.max}",
            ))

    for node_id, node in doc.nodes.items():
        path = f"nodes.{node_id}"
        if not node.absolute and not (_is_integral(node.x) and _is_integral(node.y)):
            findings.append(Finding(
                "warning",
                path,
                f"non-integer coordinates ({node.x}, {node.y}) without the "
                f"absolute flag",
            ))
        if not (chart.width.min <= node.x <= chart.width.max
                and chart.height.min <= node.y <= chart.height.max):
            findings.append(Finding(
                "warning",
                path,
                f"position ({node.x}, {node.y}) lies outside the chart bounds "
                f"[{chart.width.min}, {chart.width.max}] x "
                f"[{chart.height.min}, {chart.height.max}]",
            ))

    for i, edge in enumerate(doc.edges):
        if edge.source not in doc.nodes:
            findings.append(Finding(
                "error",
                f"edges[{i}].source",
                f"unknown node id {edge.source!r}",
            ))
        if edge.target not in doc.nodes:
            findings.append(Finding(
                "error",
                f"edges[{i}].target",
                f"unknown node id {edge.target!r}",
            ))
        if edge.source == edge.target:
            findings.append(Finding(
                "error",
                f"edges[{i}]",
                f"self-loop on node {edge.source!r}",
            ))

    for path in doc.unknown_keys:
        findings.append(Finding("warning", path, "unknown key ignored"))

    return ValidationReport(entries=tuple(findings))


# ---------------------------------------------------------------------------
# serialization


def _number_out(value: float) -> float | int:
    return int(value) if _is_integral(value) else float(value)


def _node_out(node: NodeSpec) -> dict:
    out: dict[str, object] = {"x": _number_out(node.x), "y": _number_out(node.y)}
    if node.label:
        out["label"] = node.label
    if node.color is not None:
        out["color"] = node.color
    if node.absolute:
        out["absolute"] = True
    return out


def _edge_out(edge: EdgeSpec) -> dict:
    out: dict[str, object] = {"source": edge.source, "target": edge.target}
    if edge.color is not None:
        out["color"] = edge.color
    if edge.line_style != "solid":
        out["lineStyle"] = edge.line_style
    return out


def serialize_document(doc: ChartDocument) -> str:
    """Emit canonical JSON: 2-space indent, fixed key order, defaults omitted.

    ``parse_document(serialize_document(d))`` is field-equal to ``d`` for any
    document that validates without errors.
    """
    meta: dict[str, object] = {}
    if doc.header.metadata.title:
        meta["title"] = doc.header.metadata.title
    chart = doc.header.chart
    payload = {
        "header": {
            "metadata": meta,
            "chart": {
                "width": {"min": chart.width.min, "max": chart.width.max},
                "height": {"min": chart.height.min, "max": chart.height.max},
            },
        },
        "nodes": {node_id: _node_out(node) for node_id, node in doc.nodes.items()},
        "edges": [_edge_out(edge) for edge in doc.edges],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def with_title(doc: ChartDocument, title: str) -> ChartDocument:
    """Copy of ``doc`` with the metadata title replaced."""
    return replace(doc, header=replace(doc.header, metadata=Metadata(title=title)))
