"""Render fidelity-scan CSVs into point-cloud figures.

Input is the scan format produced by `circulant scan`: a header line
`q,t,re,im,fidelity` followed by one row per lattice index. Rendering is
read-only on the CSV and writes the image atomically (temp file in the
target directory, then rename), so a crash never leaves a partial image.
"""

from __future__ import annotations

import csv
import os
import tempfile
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import IoError, MalformedCsv, MissingColumn

X_COLUMNS = ("q", "t")
Y_COLUMNS = ("fidelity", "re", "im")


@dataclass(frozen=True)
class PlotSpec:
    input_path: str
    output_path: str
    title: str = ""
    x_column: str = "t"
    y_column: str = "fidelity"
    marker_style: str = "."

    def __post_init__(self) -> None:
        if self.x_column not in X_COLUMNS:
            raise MissingColumn(f"x column must be one of {X_COLUMNS}, got {self.x_column!r}")
        if self.y_column not in Y_COLUMNS:
            raise MissingColumn(f"y column must be one of {Y_COLUMNS}, got {self.y_column!r}")


@dataclass(frozen=True)
class RenderResult:
    """What was drawn: the output path, the data, and the axis ranges."""

    output_path: str
    point_count: int
    x: tuple[float, ...] = field(repr=False)
    y: tuple[float, ...] = field(repr=False)
    y_limits: tuple[float, float]


def read_columns(path: str, x_column: str, y_column: str) -> tuple[list[float], list[float]]:
    """Parse the two requested columns out of a scan CSV."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise MalformedCsv(f"{path}: file is empty")
            for column in (x_column, y_column):
                if column not in header:
                    raise MissingColumn(f"{path}: no column {column!r} in header {header}")
            xi, yi = header.index(x_column), header.index(y_column)
            xs: list[float] = []
            ys: list[float] = []
            for row_number, row in enumerate(reader, start=2):
                if len(row) != len(header):
                    raise MalformedCsv(f"{path}:{row_number}: expected {len(header)} cells, got {len(row)}")
                try:
                    xs.append(float(row[xi]))
                    ys.append(float(row[yi]))
                except ValueError as exc:
                    raise MalformedCsv(f"{path}:{row_number}: {exc}")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}")
    if not xs:
        raise MalformedCsv(f"{path}: no data rows")
    return xs, ys


def render(spec: PlotSpec) -> RenderResult:
    """Draw the scan as unconnected markers and write the image atomically."""
    xs, ys = read_columns(spec.input_path, spec.x_column, spec.y_column)

    if spec.y_column == "fidelity":
        y_limits = (0.0, 1.05)
    else:
        y_limits = (-1.05, 1.05)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    try:
        ax.plot(xs, ys, spec.marker_style, markersize=3)
        ax.set_xlabel(spec.x_column)
        ax.set_ylabel(spec.y_column)
        ax.set_ylim(*y_limits)
        if spec.title:
            ax.set_title(spec.title)
        fig.tight_layout()
        _write_atomically(fig, spec.output_path)
    finally:
        plt.close(fig)

    return RenderResult(
        output_path=spec.output_path,
        point_count=len(xs),
        x=tuple(xs),
        y=tuple(ys),
        y_limits=y_limits,
    )


def _write_atomically(fig, output_path: str) -> None:
    directory = os.path.dirname(os.path.abspath(output_path))
    suffix = os.path.splitext(output_path)[1] or ".png"
    try:
        fd, temp_path = tempfile.mkstemp(suffix=suffix, dir=directory)
        os.close(fd)
        try:
            fig.savefig(temp_path)
            os.replace(temp_path, output_path)
        except Exception:
            os.unlink(temp_path)
            raise
    except OSError as exc:
        raise IoError(f"cannot write {output_path}: {exc}")
