# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

# Path: linfcone/runtime/config.py
"""CLI defaults and logging setup.

The only environment input is LINFCONE_LOG_LEVEL (optionally from a local
.env file); it changes verbosity, never results.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Optional

from dotenv import find_dotenv, load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

from linfcone.core.errors import ArgumentError

LOG_LEVEL_ENV = "LINFCONE_LOG_LEVEL"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
OUTPUT_FORMATS = ("text", "json")

# CLI Theme - Nord colors
CLI_THEME = Theme(
    {
        "header": "bold #88C0D0",  # Nord8 - Frost cyan
        "number": "#EBCB8B",  # Nord13 - Aurora yellow
        "prompt": "dim #D8DEE9",  # Nord4 - Snow Storm
        "success": "bold #A3BE8C",  # Nord14 - Aurora green
        "error": "bold #BF616A",  # Nord11 - Aurora red
        "info": "#88C0D0",  # Nord8 - Frost cyan
    }
)


@dataclass(frozen=True)
class Settings:
    max_arity: int = 4
    up_to: int = 4
    cap_slack: int = 2
    output_format: str = "text"
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.max_arity < 1 or self.up_to < 1:
            raise ArgumentError("max-arity and up-to must be positive")
        if self.cap_slack < 0:
            raise ArgumentError("cap slack must be non-negative")
        if self.output_format not in OUTPUT_FORMATS:
            raise ArgumentError(f"unknown output format {self.output_format!r}")
        if self.log_level not in LOG_LEVELS:
            raise ArgumentError(f"unknown log level {self.log_level!r}")

    @classmethod
    def from_args(cls, args: Any) -> "Settings":
        """Overlay parsed flags (attributes that are not None) on the defaults."""
        overrides = {}
        for f in fields(cls):
            value = getattr(args, f.name, None)
            if value is not None:
                overrides[f.name] = value
        if "log_level" not in overrides:
            overrides["log_level"] = resolve_log_level(None)
        else:
            overrides["log_level"] = str(overrides["log_level"]).upper()
        return replace(cls(), **overrides)


def resolve_log_level(flag: Optional[str]) -> str:
    if flag:
        return flag.upper()
    load_dotenv(find_dotenv(usecwd=True))
    level = os.environ.get(LOG_LEVEL_ENV, "").strip().upper()
    return level if level in LOG_LEVELS else "WARNING"


def configure_logging(level: str) -> None:
    """Route library loggers through a themed RichHandler on stderr."""
    handler = RichHandler(
        console=Console(theme=CLI_THEME, stderr=True),
        show_time=False,
        show_path=False,
        markup=False,
    )
    root = logging.getLogger()
    for existing in list(root.handlers):
        if isinstance(existing, RichHandler):
            root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.WARNING))
