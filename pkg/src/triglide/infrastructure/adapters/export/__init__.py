"""Data export adapters."""

from .csv_exporter import CsvExporter

__all__ = ["CsvExporter"]
