"""Readers for interaction-record files and bare edge lists."""

import hashlib
import json
import re
from collections.abc import Iterable
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError, field_validator

from src.errors import ParseError
from src.models.graph import SparseAdjacency
from src.models.records import InteractionKind, InteractionRecord, RecordBatch, RejectedLine
from src.spectral.adjacency import build_adjacency
from src.utils.logger import get_logger
from src.utils.time_utils import to_utc_seconds

logger = get_logger(__name__)

RECORD_FIELDS = ("source_user", "target_user", "kind", "timestamp")
_HEADER = re.compile(r"#\s*n_nodes=(\d+)(?:\s+directed=(true|false))?", re.IGNORECASE)


class NetworkFormat(str, Enum):
    AUTO = "auto"
    EDGES = "edges"
    RECORDS = "records"


class RecordPayload(BaseModel):
    """One interaction record as it appears on disk."""

    source_user: str = Field(min_length=1)
    target_user: str = Field(min_length=1)
    kind: InteractionKind
    timestamp: float = Field(ge=0)

    @field_validator("source_user", "target_user", mode="before")
    @classmethod
    def _strip_ids(cls, v):
        if v is None:
            raise ValueError("missing user id")
        return str(v).strip()

    @field_validator("kind", mode="before")
    @classmethod
    def _lower_kind(cls, v):
        return str(v).strip().lower()

    @field_validator("timestamp", mode="before")
    @classmethod
    def _utc_seconds(cls, v):
        if isinstance(v, bool) or not isinstance(v, (str, int, float)):
            raise ValueError(f"unsupported timestamp {v!r}")
        return to_utc_seconds(v)

    def to_record(self) -> InteractionRecord:
        return InteractionRecord(
            source_user=self.source_user,
            target_user=self.target_user,
            kind=self.kind,
            timestamp=self.timestamp,
        )


def file_digest(path: str | Path) -> str:
    """SHA-256 of the file contents, prefixed with the algorithm name."""
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return f"sha256:{digest}"


def _read_lines(path: str | Path) -> list[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read input: {e}", path=str(path)) from e


def _first_content_line(lines: Iterable[str]) -> str | None:
    for line in lines:
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            return stripped
    return None


def detect_format(path: str | Path) -> NetworkFormat:
    """Records if the first content line is a JSON object or a 4-field record row."""
    first = _first_content_line(_read_lines(path))
    if first is None:
        raise ParseError("input is empty", path=str(path))
    if first.startswith("{"):
        return NetworkFormat.RECORDS
    fields = first.split("\t")
    if len(fields) == 4 and (
        fields[0].strip().lower() == "source_user"
        or fields[2].strip().lower() in {k.value for k in InteractionKind}
    ):
        return NetworkFormat.RECORDS
    return NetworkFormat.EDGES


def read_records(path: str | Path) -> RecordBatch:
    """Parse a records file; malformed lines go to the rejects list."""
    batch = parse_record_lines(_read_lines(path))
    if batch.rejects:
        logger.warning(f"{path}: {batch.n_rejected} malformed record line(s) rejected")
    logger.info(f"Read {len(batch.records)} records from {path}")
    return batch


def parse_record_lines(lines: Iterable[str]) -> RecordBatch:
    """
    Parse record lines, auto-detecting the layout from the first content line.

    JSON-lines objects carry the four fields by name; TAB-separated rows
    carry them in order (source_user, target_user, kind, timestamp), with an
    optional header row.
    """
    lines = list(lines)
    first = _first_content_line(lines)
    batch = RecordBatch()
    if first is None:
        return batch
    as_json = first.startswith("{")

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            if as_json:
                payload = RecordPayload.model_validate_json(line)
            else:
                fields = [f.strip() for f in raw.rstrip("\r\n").split("\t")]
                if fields[0].lower() == "source_user":
                    continue
                if len(fields) != len(RECORD_FIELDS):
                    raise ValueError(f"expected 4 TAB-separated fields, got {len(fields)}")
                payload = RecordPayload.model_validate(dict(zip(RECORD_FIELDS, fields)))
            batch.records.append(payload.to_record())
        except ValidationError as e:
            reason = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or 'line'}: {err['msg']}"
                for err in e.errors()
            )
            batch.rejects.append(RejectedLine(line_no=line_no, reason=reason, raw=raw))
        except (ValueError, json.JSONDecodeError) as e:
            batch.rejects.append(RejectedLine(line_no=line_no, reason=str(e), raw=raw))
    return batch


def read_edge_list(path: str | Path, directed: bool | None = None) -> SparseAdjacency:
    """Read a ``src<TAB>dst`` edge list (any whitespace accepted)."""
    adjacency = parse_edge_lines(_read_lines(path), directed=directed, source=str(path))
    logger.info(f"Read {adjacency.n_nodes} nodes / {adjacency.n_edges} edges from {path}")
    return adjacency


def parse_edge_lines(
    lines: Iterable[str], directed: bool | None = None, source: str = "<edges>"
) -> SparseAdjacency:
    """
    Build a network from edge-list lines.

    A ``# n_nodes=N directed=…`` header (as written by ``write_edge_list``)
    fixes the node count and makes integer tokens literal indices, so
    isolated nodes survive a round trip. Without it, tokens are labels
    numbered in order of first appearance. An explicit ``directed`` argument
    overrides the header.
    """
    n_nodes: int | None = None
    header_directed: bool | None = None
    labels: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.match(line)
            if match and n_nodes is None and not pairs:
                n_nodes = int(match.group(1))
                if match.group(2):
                    header_directed = match.group(2).lower() == "true"
            continue

        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError("expected 'src<TAB>dst'", path=source, line_no=line_no)

        if n_nodes is not None:
            try:
                pairs.append((int(tokens[0]), int(tokens[1])))
            except ValueError as e:
                raise ParseError(
                    "indexed edge list requires integer node ids", path=source, line_no=line_no
                ) from e
        else:
            src = labels.setdefault(tokens[0], len(labels))
            dst = labels.setdefault(tokens[1], len(labels))
            pairs.append((src, dst))

    if not pairs:
        raise ParseError("no edges found", path=source)

    if directed is None:
        directed = bool(header_directed)
    if n_nodes is not None:
        return build_adjacency(n_nodes, pairs, directed=directed)
    return build_adjacency(len(labels), pairs, directed=directed, node_labels=labels)
