"""Input readers and reproducibility writers."""

from src.data.readers import (
    NetworkFormat,
    RecordPayload,
    detect_format,
    file_digest,
    parse_edge_lines,
    parse_record_lines,
    read_edge_list,
    read_records,
)
from src.data.writers import format_edge_list, write_edge_list

__all__ = [
    "NetworkFormat",
    "RecordPayload",
    "detect_format",
    "file_digest",
    "parse_edge_lines",
    "parse_record_lines",
    "read_edge_list",
    "read_records",
    "format_edge_list",
    "write_edge_list",
]
