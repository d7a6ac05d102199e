# SPDX-License-Identifier: PMM-1.0
# Copyright (c) 2025 Scott O'Nanski

"""Tests for CLI settings and log-level resolution."""

from __future__ import annotations

import argparse
import logging

import pytest
from rich.logging import RichHandler

from linfcone.core.errors import ArgumentError
from linfcone.runtime.config import (
    LOG_LEVEL_ENV,
    Settings,
    configure_logging,
    resolve_log_level,
)


def test_defaults():
    s = Settings()
    assert (s.max_arity, s.up_to, s.cap_slack) == (4, 4, 2)
    assert s.output_format == "text"


@pytest.mark.parametrize(
    "overrides",
    [{"max_arity": 0}, {"up_to": -1}, {"cap_slack": -1}, {"output_format": "yaml"}, {"log_level": "LOUD"}],
)
def test_invalid_settings(overrides):
    with pytest.raises(ArgumentError):
        Settings(**overrides)


def test_flags_overlay_defaults(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(LOG_LEVEL_ENV, raising=False)
    args = argparse.Namespace(max_arity=6, up_to=None, output_format="json", log_level=None)
    s = Settings.from_args(args)
    assert s.max_arity == 6
    assert s.up_to == 4
    assert s.output_format == "json"
    assert s.log_level == "WARNING"


def test_log_level_from_environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv(LOG_LEVEL_ENV, "debug")
    assert resolve_log_level(None) == "DEBUG"
    assert resolve_log_level("info") == "INFO"
    monkeypatch.setenv(LOG_LEVEL_ENV, "chatty")
    assert resolve_log_level(None) == "WARNING"


def test_log_level_from_dotenv(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(LOG_LEVEL_ENV, raising=False)
    (tmp_path / ".env").write_text(f"{LOG_LEVEL_ENV}=error\n", encoding="utf-8")
    assert resolve_log_level(None) == "ERROR"


def test_configure_logging_installs_one_handler():
    configure_logging("DEBUG")
    configure_logging("INFO")
    root = logging.getLogger()
    assert sum(isinstance(h, RichHandler) for h in root.handlers) == 1
    assert root.level == logging.INFO
