"""plot-scan: turn a fidelity-scan CSV into a figure image."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import X_COLUMNS, Y_COLUMNS, PlotSpec, render
from .errors import PlotError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot-scan",
        description="Render a scan CSV (header q,t,re,im,fidelity) as a point cloud.",
    )
    parser.add_argument("--in", dest="input_path", required=True, help="scan CSV to read")
    parser.add_argument("--out", dest="output_path", required=True, help="image file to write")
    parser.add_argument("--x", choices=X_COLUMNS, default="t", help="x column (default %(default)s)")
    parser.add_argument("--y", choices=Y_COLUMNS, default="fidelity",
                        help="y column (default %(default)s)")
    parser.add_argument("--title", default="", help="figure title")
    parser.add_argument("--marker", default=".", help="matplotlib marker style (default '.')")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        input_path=args.input_path,
        output_path=args.output_path,
        title=args.title,
        x_column=args.x,
        y_column=args.y,
        marker_style=args.marker,
    )
    try:
        result = render(spec)
    except PlotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {result.output_path} ({result.point_count} points)")
    return 0


def run() -> None:
    sys.exit(main())
