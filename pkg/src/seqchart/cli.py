"""Command-line entry point.

Exit codes: 0 success (warnings allowed), 1 validation errors present,
2 usage / parse / I-O errors.  Validation findings print one per line as
``SEVERITY jsonPath: message`` -- a stable, parseable format.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .ingest import ConversionError, atomic_write_text, convert_csv, write_json
from .layout import LayoutConfig
from .model import ParseError, parse_document, validate
from .render import (
    DARK_THEME,
    LIGHT_THEME,
    RenderError,
    RenderOptions,
    render_document,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2


def _load_document(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConversionError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        doc = _load_document(args.input)
    except (ParseError, ConversionError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    report = validate(doc)
    for finding in report.entries:
        print(finding)
    return EXIT_OK if report.ok else EXIT_VALIDATION


def cmd_render(args: argparse.Namespace) -> int:
    try:
        doc = _load_document(args.input)
    except (ParseError, ConversionError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    report = validate(doc)
    for finding in report.entries:
        print(finding)
    if not report.ok:
        return EXIT_VALIDATION

    layout = LayoutConfig()
    if args.scale != 1.0:
        layout = replace(layout, unit_size=layout.unit_size * args.scale)
    opts = RenderOptions(
        theme=DARK_THEME if args.dark else LIGHT_THEME,
        title_override=args.title,
        layout=layout,
        include_viewer=not args.no_viewer,
    )
    try:
        html = render_document(doc, opts)
    except RenderError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    output = args.output or str(Path(args.input).with_suffix(".html"))
    try:
        atomic_write_text(output, html)
    except ConversionError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    try:
        nodes_csv = Path(args.nodes).read_text(encoding="utf-8")
        edges_csv = Path(args.edges).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        doc = convert_csv(nodes_csv, edges_csv, title=args.title)
        write_json(doc, args.output)
    except ConversionError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqchart",
        description="Validate, convert, and render bigraded chart data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a chart JSON file")
    p.add_argument("input", help="chart JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="compile chart JSON to interactive HTML")
    p.add_argument("input", help="chart JSON file")
    p.add_argument("-o", "--output", default=None,
                   help="output HTML path (default: input with .html)")
    p.add_argument("--dark", action="store_true", help="dark theme")
    p.add_argument("--scale", type=float, default=1.0,
                   help="multiply pixels-per-unit by this factor")
    p.add_argument("--no-viewer", action="store_true",
                   help="emit static HTML without the interactive viewer")
    p.add_argument("--title", default=None, help="override the chart title")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("convert", help="convert a nodes/edges CSV pair to JSON")
    p.add_argument("nodes", help="nodes CSV (columns id,x,y,label)")
    p.add_argument("edges", help="edges CSV (columns source,target,kind)")
    p.add_argument("-o", "--output", default="chart.json",
                   help="output JSON path (default: chart.json)")
    p.add_argument("--title", default="", help="chart title")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
