"""Point-cloud rendering for fidelity-scan CSVs."""

from .core import PlotSpec, RenderResult, read_columns, render
from .errors import IoError, MalformedCsv, MissingColumn, PlotError

__version__ = "0.1.0"

__all__ = [
    "IoError",
    "MalformedCsv",
    "MissingColumn",
    "PlotError",
    "PlotSpec",
    "RenderResult",
    "read_columns",
    "render",
]
