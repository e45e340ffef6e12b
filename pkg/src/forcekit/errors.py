"""Exception types and brute-force size caps."""

from __future__ import annotations

import os

DEFAULT_MAX_N = 20


def max_oracle_n() -> int:
    """Return the brute-force cap, honouring ``FORCEKIT_MAX_N`` when set."""
    raw = os.environ.get("FORCEKIT_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    return int(raw)


class ForceKitError(Exception):
    """Base class for every error raised by the library."""

    kind = "error"


class ParseError(ForceKitError, ValueError):
    kind = "parse-error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InstanceTooLarge(ForceKitError):
    kind = "instance-too-large"

    def __init__(self, n: int, cap: int, what: str = "brute-force search"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} needs n <= {cap}, got n = {n}")


class NotAForest(ForceKitError, ValueError):
    kind = "not-a-forest"


class NotEligible(ForceKitError, ValueError):
    kind = "not-eligible"


class NoDoublePendant(ForceKitError, ValueError):
    kind = "no-double-pendant"


class InvalidCover(ForceKitError, ValueError):
    kind = "invalid-cover"


class InvalidChoice(ForceKitError, ValueError):
    kind = "invalid-choice"


class InvalidRealization(ForceKitError, ValueError):
    kind = "invalid-realization"


class InvalidFamily(ForceKitError, ValueError):
    kind = "invalid-family"
