"""Bigraded chart toolchain: validate chart JSON, lay it out on an integer
lattice, and compile it to a self-contained interactive HTML page."""

from .ingest import ConversionError, convert_csv, write_json
from .layout import LayoutConfig, layout_document
from .model import (
    ChartDocument,
    ParseError,
    ValidationReport,
    parse_document,
    serialize_document,
    validate,
)
from .render import (
    DARK_THEME,
    LIGHT_THEME,
    RenderOptions,
    render_document,
)

__version__ = "0.1.0"

__all__ = [
    "ChartDocument",
    "ConversionError",
    "DARK_THEME",
    "LIGHT_THEME",
    "LayoutConfig",
    "ParseError",
    "RenderOptions",
    "ValidationReport",
    "convert_csv",
    "layout_document",
    "parse_document",
    "render_document",
    "serialize_document",
    "validate",
    "write_json",
]
