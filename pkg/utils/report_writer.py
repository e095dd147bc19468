"""Writing reports to stdout or to a flat file."""

import csv
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, TextIO

from surgery.families import SurgeryRecord
from surgery.records import CSV_FIELDS, record_to_csv_row, record_to_json_line, record_to_text
from utils.errors import ReportWriteError

logger = logging.getLogger(__name__)


class ReportWriter:
    """Streams records in one of the report formats.

    Use as a context manager; the destination is opened on enter and closed
    on exit (stdout is never closed).
    """

    def __init__(self, fmt: str = "text", output: Optional[str] = None,
                 stream: Optional[TextIO] = None):
        """Initialize the writer.

        Args:
            fmt: One of 'text', 'jsonl', 'csv'
            output: Path to write to; stdout when None
            stream: Explicit stream (overrides output; used by tests)
        """
        self.fmt = fmt
        self.output = Path(output) if output else None
        self._stream = stream
        self._owns_stream = False
        self._csv = None
        self.records_written = 0

    def __enter__(self) -> "ReportWriter":
        if self._stream is None:
            if self.output is None:
                self._stream = sys.stdout
            else:
                try:
                    self.output.parent.mkdir(parents=True, exist_ok=True)
                    self._stream = open(self.output, 'w', newline='', encoding='utf-8')
                except OSError as e:
                    raise ReportWriteError(f"cannot write report to {self.output}: {e}") from e
                self._owns_stream = True
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._owns_stream:
            self._stream.close()
            logger.info("wrote %d record(s) to %s", self.records_written, self.output)
        return False

    def _write(self, text: str):
        try:
            self._stream.write(text)
        except OSError as e:
            raise ReportWriteError(f"write failed: {e}") from e

    def write_record(self, record: SurgeryRecord):
        """Write one record in the configured format."""
        if self.fmt == 'jsonl':
            self._write(record_to_json_line(record) + '\n')
        elif self.fmt == 'csv':
            if self._csv is None:
                self._csv = csv.writer(self._stream, lineterminator='\n')
                self._csv.writerow(CSV_FIELDS)
            self._csv.writerow(record_to_csv_row(record))
        else:
            if self.records_written:
                self._write('\n')
            self._write(record_to_text(record) + '\n')
        self.records_written += 1

    def write_records(self, records: Iterable[SurgeryRecord]):
        for record in records:
            self.write_record(record)

    def write_summary(self, summary: Dict[str, Any], text: str = ""):
        """Write the trailing summary line/footer."""
        if self.fmt == 'jsonl':
            self._write(json.dumps(summary, sort_keys=True) + '\n')
        elif self.fmt == 'csv':
            if self._csv is None:
                self._csv = csv.writer(self._stream, lineterminator='\n')
                self._csv.writerow(CSV_FIELDS)
            self._write('# summary ' + json.dumps(summary, sort_keys=True) + '\n')
        else:
            self._write('\n' + (text or json.dumps(summary, sort_keys=True)) + '\n')

    def write_object(self, data: Dict[str, Any], text: str):
        """Write a non-record result (tangle or SFS comparison).

        JSON formats get ``data``; text gets ``text``. CSV falls back to a
        single key,value table.
        """
        if self.fmt == 'jsonl':
            self._write(json.dumps(data, sort_keys=True, ensure_ascii=False) + '\n')
        elif self.fmt == 'csv':
            writer = csv.writer(self._stream, lineterminator='\n')
            for key in sorted(data):
                value = data[key]
                if isinstance(value, (list, dict)):
                    value = json.dumps(value, sort_keys=True, ensure_ascii=False)
                writer.writerow([key, value])
        else:
            self._write(text + '\n')
