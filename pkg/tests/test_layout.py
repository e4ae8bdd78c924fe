import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from seqchart.layout import (
    LayoutConfig,
    chart_to_canvas,
    compute_frame,
    layout_document,
    place_nodes,
    route_edges,
)
from seqchart.model import (
    ChartConfig,
    ChartDocument,
    EdgeSpec,
    Header,
    NodeSpec,
    Range,
)

from strategies import valid_documents

BOUNDS = ChartConfig(Range(0, 5), Range(0, 5))
CFG = LayoutConfig()


def _doc(nodes, edges=(), bounds=BOUNDS):
    return ChartDocument(header=Header(chart=bounds), nodes=nodes,
                         edges=tuple(edges))


# --- transform --------------------------------------------------------------


def test_origin_maps_to_bottom_left():
    assert chart_to_canvas(0, 0, BOUNDS, CFG) == (40, 340)


def test_top_left_corner():
    assert chart_to_canvas(BOUNDS.width.min, BOUNDS.height.max, BOUNDS, CFG) \
        == (CFG.margin, CFG.margin)


def test_top_right_corner():
    assert chart_to_canvas(5, 5, BOUNDS, CFG) == (340, 40)


@settings(max_examples=100)
@given(st.integers(-20, 20), st.integers(-20, 20),
       st.integers(-20, 20), st.integers(-20, 20))
def test_transform_monotone(x1, x2, y1, y2):
    cx1, cy1 = chart_to_canvas(x1, y1, BOUNDS, CFG)
    cx2, cy2 = chart_to_canvas(x2, y2, BOUNDS, CFG)
    if x1 < x2:
        assert cx1 < cx2
    if y1 < y2:
        assert cy1 > cy2


# --- config invariants ------------------------------------------------------


@pytest.mark.parametrize("kwargs", [
    {"unit_size": 0},
    {"margin": -1},
    {"node_radius": 0},
    {"collision_spacing": 7.9},  # < 2 * node_radius
])
def test_bad_layout_config_rejected(kwargs):
    with pytest.raises(ValueError):
        LayoutConfig(**kwargs)


# --- node placement ---------------------------------------------------------


def test_single_node_centered():
    placed = place_nodes(_doc({"a": NodeSpec(x=0, y=0)}), CFG)
    assert (placed[0].cx, placed[0].cy) == chart_to_canvas(0, 0, BOUNDS, CFG)


def test_two_colocated_nodes_offset():
    placed = place_nodes(
        _doc({"a": NodeSpec(x=1, y=1), "b": NodeSpec(x=1, y=1)}), CFG)
    cx, cy = chart_to_canvas(1, 1, BOUNDS, CFG)
    assert [(p.cx, p.cy) for p in placed] == [(cx - 6, cy), (cx + 6, cy)]


def test_three_colocated_nodes_offset():
    placed = place_nodes(
        _doc({k: NodeSpec(x=2, y=3) for k in "abc"}), CFG)
    cx, _ = chart_to_canvas(2, 3, BOUNDS, CFG)
    assert [p.cx - cx for p in placed] == [-12, 0, 12]


def test_absolute_node_exempt_from_collision():
    nodes = {
        "a": NodeSpec(x=1, y=1),
        "b": NodeSpec(x=1, y=1, absolute=True),
    }
    placed = {p.id: p for p in place_nodes(_doc(nodes), CFG)}
    cx, cy = chart_to_canvas(1, 1, BOUNDS, CFG)
    # "a" is alone in its non-absolute group; "b" sits exactly on the cell
    assert (placed["a"].cx, placed["a"].cy) == (cx, cy)
    assert (placed["b"].cx, placed["b"].cy) == (cx, cy)


def test_placement_preserves_document_order():
    nodes = {k: NodeSpec(x=i % 2, y=0) for i, k in enumerate("pqrs")}
    placed = place_nodes(_doc(nodes), CFG)
    assert [p.id for p in placed] == list("pqrs")


@settings(max_examples=60)
@given(valid_documents())
def test_collision_group_centering_and_separation(doc):
    placed = place_nodes(doc, CFG)
    bounds = doc.header.chart
    groups: dict[tuple, list] = {}
    for p in placed:
        if not p.spec.absolute:
            groups.setdefault((p.spec.x, p.spec.y), []).append(p)
    for (x, y), members in groups.items():
        cx, cy = chart_to_canvas(x, y, bounds, CFG)
        assert sum(m.cx for m in members) / len(members) == pytest.approx(cx)
        assert all(m.cy == cy for m in members)
        for a, b in zip(members, members[1:]):
            assert b.cx - a.cx == pytest.approx(CFG.collision_spacing)


# --- edge routing -----------------------------------------------------------


def test_example_edge_is_vertical(example_doc):
    placed = place_nodes(example_doc, CFG)
    (edge,) = route_edges(example_doc, placed)
    assert edge.x1 == edge.x2
    assert edge.y1 != edge.y2


def test_edges_attach_to_offset_centers():
    nodes = {
        "a": NodeSpec(x=1, y=1),
        "b": NodeSpec(x=1, y=1),
        "c": NodeSpec(x=2, y=2),
    }
    doc = _doc(nodes, [EdgeSpec(source="b", target="c")])
    placed = place_nodes(doc, CFG)
    by_id = {p.id: p for p in placed}
    (edge,) = route_edges(doc, placed)
    assert (edge.x1, edge.y1) == (by_id["b"].cx, by_id["b"].cy)
    assert (edge.x2, edge.y2) == (by_id["c"].cx, by_id["c"].cy)


def test_no_edges_yields_empty():
    doc = _doc({"a": NodeSpec(x=0, y=0)})
    assert route_edges(doc, place_nodes(doc, CFG)) == ()


def test_unresolvable_endpoint_is_internal_error():
    doc = _doc({"a": NodeSpec(x=0, y=0)}, [EdgeSpec(source="a", target="gone")])
    with pytest.raises(RuntimeError, match="gone"):
        route_edges(doc, place_nodes(doc, CFG))


@settings(max_examples=60)
@given(valid_documents())
def test_edge_endpoints_coincide_with_node_centers(doc):
    placed = place_nodes(doc, CFG)
    centers = {(p.cx, p.cy) for p in placed}
    for edge in route_edges(doc, placed):
        assert (edge.x1, edge.y1) in centers
        assert (edge.x2, edge.y2) in centers


# --- frame ------------------------------------------------------------------


def test_frame_for_example_bounds():
    view_box, grid, ticks = compute_frame(BOUNDS, CFG)
    assert (view_box.width, view_box.height) == (380, 380)
    vertical = [g for g in grid if g.x1 == g.x2]
    horizontal = [g for g in grid if g.y1 == g.y2]
    assert len(vertical) == 6 and len(horizontal) == 6


def test_frame_degenerate_single_cell():
    view_box, grid, _ = compute_frame(ChartConfig(Range(0, 0), Range(0, 0)), CFG)
    assert (view_box.width, view_box.height) == (80, 80)
    assert len(grid) == 2


def test_frame_negative_bounds():
    bounds = ChartConfig(Range(-2, 2), Range(0, 3))
    _, grid, ticks = compute_frame(bounds, CFG)
    vertical = [g for g in grid if g.x1 == g.x2]
    assert len(vertical) == 5
    x_labels = [t.text for t in ticks if t.axis == "x"]
    assert x_labels == ["-2", "-1", "0", "1", "2"]


def test_layout_is_deterministic(example_doc):
    assert layout_document(example_doc) == layout_document(example_doc)
