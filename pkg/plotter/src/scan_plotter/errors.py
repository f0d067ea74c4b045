class PlotError(Exception):
    """Base class for scan-plotter failures."""


class MissingColumn(PlotError):
    """A requested column is absent from the CSV header."""


class MalformedCsv(PlotError):
    """The CSV has no data rows or a cell that does not parse as a number."""


class IoError(PlotError):
    """Reading the CSV or writing the image failed at the OS level."""
