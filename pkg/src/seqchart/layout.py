"""Chart-unit to canvas-space layout.

Chart coordinates live on a bigraded integer lattice with y increasing
upward; canvas coordinates are SVG pixels with y increasing downward.  The
transform is affine and strictly monotone.  Nodes sharing an exact (x, y)
cell are spread into a horizontal row centered on the cell; nodes flagged
``absolute`` are exempt and land exactly where their coordinates say.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ChartConfig, ChartDocument, EdgeSpec, NodeSpec

__all__ = [
    "LayoutConfig",
    "PlacedNode",
    "PlacedEdge",
    "GridLine",
    "AxisTick",
    "ViewBox",
    "LayoutResult",
    "chart_to_canvas",
    "place_nodes",
    "route_edges",
    "compute_frame",
    "layout_document",
]


@dataclass(frozen=True)
class LayoutConfig:
    unit_size: float = 60.0      # pixels per chart unit
    margin: float = 40.0
    node_radius: float = 4.0
    collision_spacing: float = 12.0  # between co-located node centers

    def __post_init__(self) -> None:
        if self.unit_size <= 0:
            raise ValueError("unit_size must be positive")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")
        if self.node_radius <= 0:
            raise ValueError("node_radius must be positive")
        if self.collision_spacing < 2 * self.node_radius:
            raise ValueError(
                "collision_spacing must be at least twice node_radius, got "
                f"{self.collision_spacing} < {2 * self.node_radius}"
            )


@dataclass(frozen=True)
class PlacedNode:
    id: str
    cx: float
    cy: float
    spec: NodeSpec


@dataclass(frozen=True)
class PlacedEdge:
    x1: float
    y1: float
    x2: float
    y2: float
    spec: EdgeSpec


@dataclass(frozen=True)
class GridLine:
    x1: float
    y1: float
    x2: float
    y2: float


@dataclass(frozen=True)
class AxisTick:
    x: float
    y: float
    text: str
    axis: str  # "x" | "y"


@dataclass(frozen=True)
class ViewBox:
    x: float
    y: float
    width: float
    height: float


@dataclass(frozen=True)
class LayoutResult:
    placed_nodes: tuple[PlacedNode, ...]
    placed_edges: tuple[PlacedEdge, ...]
    view_box: ViewBox
    grid_lines: tuple[GridLine, ...]
    axis_ticks: tuple[AxisTick, ...]
    node_radius: float


def chart_to_canvas(x: float, y: float, bounds: ChartConfig,
                    cfg: LayoutConfig) -> tuple[float, float]:
    """Map chart coordinates to canvas pixels (y axis flips)."""
    cx = cfg.margin + (x - bounds.width.min) * cfg.unit_size
    cy = cfg.margin + (bounds.height.max - y) * cfg.unit_size
    return cx, cy


def place_nodes(doc: ChartDocument, cfg: LayoutConfig) -> tuple[PlacedNode, ...]:
    """Place every node, spreading same-cell groups into centered rows.

    Within a group of size k, node i (document order, 0-based) is offset
    horizontally by (i - (k - 1) / 2) * collision_spacing.  Output order is
    document order.
    """
    bounds = doc.header.chart
    group_sizes: dict[tuple[float, float], int] = {}
    for node in doc.nodes.values():
        if not node.absolute:
            key = (node.x, node.y)
            group_sizes[key] = group_sizes.get(key, 0) + 1

    group_seen: dict[tuple[float, float], int] = {}
    placed = []
    for node_id, node in doc.nodes.items():
        cx, cy = chart_to_canvas(node.x, node.y, bounds, cfg)
        if not node.absolute:
            key = (node.x, node.y)
            i = group_seen.get(key, 0)
            group_seen[key] = i + 1
            k = group_sizes[key]
            cx += (i - (k - 1) / 2) * cfg.collision_spacing
        placed.append(PlacedNode(id=node_id, cx=cx, cy=cy, spec=node))
    return tuple(placed)


def route_edges(doc: ChartDocument,
                placed: tuple[PlacedNode, ...]) -> tuple[PlacedEdge, ...]:
    """Straight segment per edge, from source center to target center."""
    centers = {p.id: (p.cx, p.cy) for p in placed}
    edges = []
    for i, edge in enumerate(doc.edges):
        try:
            x1, y1 = centers[edge.source]
            x2, y2 = centers[edge.target]
        except KeyError as exc:
            raise RuntimeError(
                f"edges[{i}]: endpoint {exc.args[0]!r} has no placed node; "
                f"layout requires a document that validated without errors"
            ) from None
        edges.append(PlacedEdge(x1=x1, y1=y1, x2=x2, y2=y2, spec=edge))
    return tuple(edges)


def compute_frame(bounds: ChartConfig, cfg: LayoutConfig
                  ) -> tuple[ViewBox, tuple[GridLine, ...], tuple[AxisTick, ...]]:
    """Frame geometry: viewbox, one gridline and tick per integer coordinate."""
    width = 2 * cfg.margin + (bounds.width.max - bounds.width.min) * cfg.unit_size
    height = 2 * cfg.margin + (bounds.height.max - bounds.height.min) * cfg.unit_size
    view_box = ViewBox(0.0, 0.0, width, height)

    top = cfg.margin
    bottom = height - cfg.margin
    left = cfg.margin
    right = width - cfg.margin

    grid_lines: list[GridLine] = []
    ticks: list[AxisTick] = []
    for i in range(bounds.width.min, bounds.width.max + 1):
        cx, _ = chart_to_canvas(i, bounds.height.min, bounds, cfg)
        grid_lines.append(GridLine(cx, top, cx, bottom))
        ticks.append(AxisTick(cx, bottom + cfg.margin / 2, str(i), "x"))
    for j in range(bounds.height.min, bounds.height.max + 1):
        _, cy = chart_to_canvas(bounds.width.min, j, bounds, cfg)
        grid_lines.append(GridLine(left, cy, right, cy))
        ticks.append(AxisTick(left - cfg.margin / 2, cy, str(j), "y"))
    return view_box, tuple(grid_lines), tuple(ticks)


def layout_document(doc: ChartDocument,
                    cfg: LayoutConfig | None = None) -> LayoutResult:
    """Full layout pass: frame, node placement, edge routing."""
    cfg = cfg or LayoutConfig()
    view_box, grid_lines, ticks = compute_frame(doc.header.chart, cfg)
    placed = place_nodes(doc, cfg)
    edges = route_edges(doc, placed)
    return LayoutResult(
        placed_nodes=placed,
        placed_edges=edges,
        view_box=view_box,
        grid_lines=grid_lines,
        axis_ticks=ticks,
        node_radius=cfg.node_radius,
    )
