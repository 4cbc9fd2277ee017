"""CSV export of sweep data."""

import csv
import io
import logging
from pathlib import Path
from typing import Any, Iterable, Sequence, TextIO

from triglide.shared.lib.formatting import format_row

_logger = logging.getLogger(__name__)


class CsvExporter:
    """Writes a header row and data rows; comma delimiter, '.' decimal point."""

    def __init__(self, header: Sequence[str]):
        self.header = list(header)

    def write(self, rows: Iterable[Sequence[Any]], stream: TextIO) -> int:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.header)
        count = 0
        for row in rows:
            if len(row) != len(self.header):
                raise ValueError(
                    f"row has {len(row)} values, header has {len(self.header)}"
                )
            writer.writerow(format_row(row))
            count += 1
        return count

    def dumps(self, rows: Iterable[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        self.write(rows, buffer)
        return buffer.getvalue()

    def export(self, rows: Iterable[Sequence[Any]], path: str | Path) -> int:
        """Write to ``path``; raises ``OSError`` when it cannot be opened."""
        path = Path(path)
        with path.open("w", encoding="utf-8", newline="") as handle:
            count = self.write(rows, handle)
        _logger.info("Wrote %d rows to %s", count, path)
        return count
