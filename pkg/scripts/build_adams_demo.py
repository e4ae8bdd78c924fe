#!/usr/bin/env python3
"""Build the bundled Adams-chart demo: CSV -> JSON -> HTML (light and dark).

Usage: python3 scripts/build_adams_demo.py [output-dir]
"""

import sys
from pathlib import Path

from seqchart.cli import main as seqchart

ROOT = Path(__file__).parents[1]
DATA = ROOT / "data"


def run(out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / "adams.json"
    steps = [
        ["convert", str(DATA / "adams_nodes.csv"), str(DATA / "adams_edges.csv"),
         "-o", str(json_path), "--title", "Classical Adams chart (first stems)"],
        ["validate", str(json_path)],
        ["render", str(json_path), "-o", str(out_dir / "adams.html")],
        ["render", str(json_path), "--dark", "-o", str(out_dir / "adams-dark.html")],
        ["render", str(DATA / "example.json"), "-o", str(out_dir / "example.html")],
    ]
    for argv in steps:
        code = seqchart(argv)
        if code != 0:
            sys.exit(f"step failed ({code}): seqchart {' '.join(argv)}")
    print(f"demo written to {out_dir}/")


if __name__ == "__main__":
    run(Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "out")
