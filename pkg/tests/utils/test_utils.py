import logging
from pathlib import Path

import pytest

from mereon.utils import get_output_dir, setup_logger


def test_explicit_output_dir_wins(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MEREON_OUT", "/from/env")

    assert get_output_dir("/explicit") == Path("/explicit")


def test_output_dir_from_envvar(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MEREON_OUT", "/from/env")

    assert get_output_dir() == Path("/from/env")


def test_output_dir_defaults_to_cwd(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.delenv("MEREON_OUT", raising=False)
    monkeypatch.chdir(tmp_path)

    assert get_output_dir() == tmp_path


def test_setup_logger_adds_a_single_handler() -> None:
    logger = setup_logger("mereon.tests.utils")
    same_logger = setup_logger("mereon.tests.utils")

    assert logger is same_logger
    assert logger.level == logging.INFO
    assert len(logger.handlers) == 1
