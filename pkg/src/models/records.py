"""Interaction record and time window models."""

from dataclasses import dataclass, field
from enum import Enum


class InteractionKind(str, Enum):
    MENTION = "mention"
    REPLY = "reply"
    QUOTE = "quote"
    RETWEET = "retweet"
    OTHER = "other"


# Retweets are left out so the network reflects conversation, not amplification
DEFAULT_KINDS: frozenset[InteractionKind] = frozenset(
    {InteractionKind.MENTION, InteractionKind.REPLY, InteractionKind.QUOTE}
)


@dataclass(frozen=True)
class InteractionRecord:
    """A single directed interaction between two users."""

    source_user: str
    target_user: str
    kind: InteractionKind
    timestamp: float

    def __post_init__(self):
        if not self.source_user or not self.target_user:
            raise ValueError("source_user and target_user must be nonempty")
        if self.timestamp < 0:
            raise ValueError(f"negative timestamp {self.timestamp}")
        if not isinstance(self.kind, InteractionKind):
            object.__setattr__(self, "kind", InteractionKind(self.kind))


@dataclass(frozen=True)
class WindowSpec:
    """Half-open time window [start, end) over which a network is built."""

    label: str
    start: float
    end: float
    include_kinds: frozenset[InteractionKind] = field(default=DEFAULT_KINDS)

    def __post_init__(self):
        if not self.start < self.end:
            raise ValueError(f"window '{self.label}': start must precede end")
        object.__setattr__(
            self, "include_kinds", frozenset(InteractionKind(k) for k in self.include_kinds)
        )

    def contains(self, record: InteractionRecord) -> bool:
        return record.kind in self.include_kinds and self.start <= record.timestamp < self.end


@dataclass(frozen=True)
class RejectedLine:
    """An input line that could not be turned into a record."""

    line_no: int
    reason: str
    raw: str


@dataclass
class RecordBatch:
    """Parsed records plus the rejects report for one input file."""

    records: list[InteractionRecord] = field(default_factory=list)
    rejects: list[RejectedLine] = field(default_factory=list)

    @property
    def n_rejected(self) -> int:
        return len(self.rejects)

    def span(self) -> tuple[float, float] | None:
        """Smallest and largest timestamp, if any records were read."""
        if not self.records:
            return None
        stamps = [r.timestamp for r in self.records]
        return min(stamps), max(stamps)
