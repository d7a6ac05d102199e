# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/core/errors.py
"""Exception hierarchy shared by the library and the CLI.

Each error carries the process exit status the CLI reports for it. Diagnostic
checks never raise for mathematical failures; they return reports instead.
"""

from __future__ import annotations

from typing import Optional


class LinfconeError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class FormatError(LinfconeError, ValueError):
    """Malformed input document or degree-inconsistent table entry."""

    exit_code = 2

    def __init__(self, message: str, location: Optional[str] = None) -> None:
        self.location = location
        text = f"{location}: {message}" if location else message
        super().__init__(text)


class CapacityError(LinfconeError):
    """A truncation (t-degree cap, maximal arity) would be exceeded."""

    exit_code = 3

    def __init__(self, message: str, needed: Optional[int] = None) -> None:
        self.needed = needed
        text = f"{message} (needs {needed})" if needed is not None else message
        super().__init__(text)


class ArgumentError(LinfconeError, ValueError):
    """A precondition of an operation does not hold."""

    exit_code = 2


class ConsistencyError(LinfconeError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 1
