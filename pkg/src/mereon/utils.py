import logging
import os
from pathlib import Path
from typing import Optional


def setup_logger(name: str) -> logging.Logger:
    """Outputs logs to stderr so that report output on stdout stays clean.

    Inspired by testcontainers.core.utils.setup_logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setLevel(logging.INFO)
        handler.setFormatter(logging.Formatter(fmt="%(name)s: %(message)s"))
        logger.addHandler(handler)
    return logger


def get_output_dir(out: Optional[str] = None) -> Path:
    """Resolves the output directory: explicit value, then MEREON_OUT, then the working directory."""
    if out:
        return Path(out)
    if env_out := os.getenv("MEREON_OUT"):
        return Path(env_out)
    return Path.cwd()
