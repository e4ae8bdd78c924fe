"""CSV to chart-JSON conversion.

The CSV layout here is this project's own documented format, not a universal
one -- upstream data sources each need a small bespoke converter, and this
module doubles as the template for writing one:

* nodes CSV: header row with columns ``id,x,y,label`` (label optional),
* edges CSV: header row with columns ``source,target,kind`` (kind optional).

Edge ``kind`` maps to visual style: ``d2``, ``d3``, ... (differentials) get
a per-page color from a fixed palette; ``mult``, empty, or anything else
keeps the theme-default color.  Chart bounds are the tight integer bounding
box of the node coordinates.
"""

from __future__ import annotations

import csv
import io
import os
import re
import tempfile
import warnings

from .model import (
    ChartConfig,
    ChartDocument,
    EdgeSpec,
    Header,
    Metadata,
    NodeSpec,
    Range,
    serialize_document,
    validate,
)

__all__ = ["ConversionError", "DIFFERENTIAL_PALETTE", "convert_csv", "write_json"]


class ConversionError(ValueError):
    pass


# One color per differential page, cycling: d2, d3, d4, ...
DIFFERENTIAL_PALETTE = (
    "#d62728",  # d2 red
    "#1f77b4",  # d3 blue
    "#2ca02c",  # d4 green
    "#9467bd",  # d5 purple
    "#ff7f0e",  # d6 orange
    "#8c564b",  # d7 brown
)

_DIFFERENTIAL_RE = re.compile(r"^d(\d+)$")


def kind_color(kind: str) -> str | None:
    """Palette color for differential kinds; None (theme default) otherwise."""
    m = _DIFFERENTIAL_RE.match(kind.strip())
    if m:
        page = int(m.group(1))
        return DIFFERENTIAL_PALETTE[(page - 2) % len(DIFFERENTIAL_PALETTE)]
    return None


def _read_rows(text: str, required: tuple[str, ...], optional: tuple[str, ...],
               what: str) -> list[dict[str, str]]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ConversionError(f"{what} CSV is empty (missing header row)") from None
    columns = [c.strip() for c in header]
    for col in required:
        if col not in columns:
            raise ConversionError(f"{what} CSV is missing required column {col!r}")
    known = set(required) | set(optional)
    for col in columns:
        if col not in known:
            warnings.warn(f"{what} CSV: ignoring unknown column {col!r}",
                          stacklevel=3)
    rows = []
    for raw in reader:
        if not raw or all(not cell.strip() for cell in raw):
            continue
        rows.append({col: (raw[i] if i < len(raw) else "")
                     for i, col in enumerate(columns) if col in known})
    return rows


def _parse_int(value: str, column: str, row: int) -> int:
    try:
        return int(value.strip())
    except ValueError:
        raise ConversionError(
            f"nodes CSV row {row}: column {column!r} is not an integer: "
            f"{value!r}"
        ) from None


def convert_csv(nodes_csv: str, edges_csv: str, title: str = "") -> ChartDocument:
    """Build a chart document from a nodes/edges CSV pair.

    Row order is preserved as node/edge order.  The result always validates
    without errors; referential problems are conversion errors instead.
    """
    node_rows = _read_rows(nodes_csv, ("id", "x", "y"), ("label",), "nodes")
    edge_rows = _read_rows(edges_csv, ("source", "target"), ("kind",), "edges")

    nodes: dict[str, NodeSpec] = {}
    for i, row in enumerate(node_rows, start=1):
        node_id = row.get("id", "").strip()
        if not node_id:
            raise ConversionError(f"nodes CSV row {i}: empty id")
        if node_id in nodes:
            raise ConversionError(f"nodes CSV row {i}: duplicate id {node_id!r}")
        nodes[node_id] = NodeSpec(
            x=_parse_int(row.get("x", ""), "x", i),
            y=_parse_int(row.get("y", ""), "y", i),
            label=row.get("label", ""),
        )

    edges = []
    dangling = []
    for i, row in enumerate(edge_rows, start=1):
        source = row.get("source", "").strip()
        target = row.get("target", "").strip()
        if not source or not target:
            raise ConversionError(f"edges CSV row {i}: empty source or target")
        for endpoint in (source, target):
            if endpoint not in nodes:
                dangling.append((i, endpoint))
        edges.append(EdgeSpec(source=source, target=target,
                              color=kind_color(row.get("kind", ""))))
    if dangling:
        detail = "; ".join(f"row {i}: unknown id {ep!r}" for i, ep in dangling)
        raise ConversionError(f"edges CSV references absent nodes: {detail}")

    if nodes:
        xs = [int(n.x) for n in nodes.values()]
        ys = [int(n.y) for n in nodes.values()]
        bounds = ChartConfig(Range(min(xs), max(xs)), Range(min(ys), max(ys)))
    else:
        bounds = ChartConfig(Range(0, 0), Range(0, 0))

    doc = ChartDocument(
        header=Header(metadata=Metadata(title=title), chart=bounds),
        nodes=nodes,
        edges=tuple(edges),
    )
    report = validate(doc)
    assert report.ok, f"conversion produced an invalid document: {report.entries}"
    return doc


def atomic_write_text(path: str | os.PathLike, text: str) -> None:
    """Write via a temp file in the same directory, then rename."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-",
                                   suffix=os.path.basename(path))
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise
    except OSError as exc:
        raise ConversionError(f"cannot write {path}: {exc}") from exc


def write_json(doc: ChartDocument, path: str | os.PathLike) -> None:
    """Serialize ``doc`` to ``path`` atomically."""
    atomic_write_text(path, serialize_document(doc))
