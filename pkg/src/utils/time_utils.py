"""Timestamp utilities: everything is UTC seconds internally."""

from datetime import datetime

import pytz

UTC = pytz.UTC


def to_utc_seconds(value: str | int | float) -> float:
    """
    Convert an epoch-seconds number or an ISO-8601 date/datetime to UTC seconds.

    Naive datetimes are taken to be UTC; aware ones are converted.
    """
    if isinstance(value, (int, float)):
        return float(value)

    text = value.strip()
    try:
        return float(text)
    except ValueError:
        pass

    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    dt = datetime.fromisoformat(text)
    if dt.tzinfo is None:
        dt = UTC.localize(dt)
    else:
        dt = dt.astimezone(UTC)
    return dt.timestamp()


def format_utc(seconds: float) -> str:
    """Render UTC seconds as an ISO-8601 string for logs and tables."""
    return datetime.fromtimestamp(seconds, UTC).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_window_arg(text: str) -> tuple[str, float, float]:
    """
    Parse a CLI window argument ``LABEL=START..END``.

    START is inclusive, END exclusive. Either bound may be an ISO date,
    an ISO datetime or epoch seconds.
    """
    label, sep, span = text.partition("=")
    start, dots, end = span.partition("..")
    if not sep or not dots or not label.strip():
        raise ValueError(f"window must look like LABEL=START..END, got '{text}'")
    return label.strip(), to_utc_seconds(start), to_utc_seconds(end)
