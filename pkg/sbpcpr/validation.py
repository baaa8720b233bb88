from __future__ import annotations

import numbers
import re

from .models import ConfigurationError

_PREFIX_PATTERN = re.compile(r"^[A-Za-z0-9._/\-]+$")


def sanitize_output_prefix(value: object, *, max_length: int = 255) -> str:
    if not isinstance(value, str):
        raise ConfigurationError("output prefix must be a string")

    cleaned = value.replace("\x00", "").strip()
    if not cleaned:
        raise ConfigurationError("output prefix must be a non-empty string")
    if len(cleaned) > max_length:
        raise ConfigurationError("output prefix is too long")
    if not _PREFIX_PATTERN.match(cleaned):
        raise ConfigurationError("output prefix may only contain letters, digits, '.', '_', '-' and '/'")
    if cleaned.endswith("/"):
        raise ConfigurationError("output prefix must name a file stem, not a directory")
    return cleaned


def validate_degree(p: object, *, p_max: int) -> int:
    if isinstance(p, bool) or not isinstance(p, numbers.Integral):
        raise ConfigurationError("polynomial degree must be an integer")
    if p < 1 or p > p_max:
        raise ConfigurationError(f"polynomial degree must satisfy 1 <= p <= {p_max}, got {p}")
    return int(p)
