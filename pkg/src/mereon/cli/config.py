import os
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from mereon.utils import get_output_dir

DEFAULT_SAMPLES = 1024
DEFAULT_SEED = 42


class UsageError(Exception):
    pass


class Command(str, Enum):
    VERIFY = "verify"
    REPORT = "report"
    MESH = "mesh"
    MCKAY = "mckay"
    KNOT = "knot"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    MD = "md"
    OBJ = "obj"
    PLY = "ply"
    DOT = "dot"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    out: Path
    format: Optional[OutputFormat] = None
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    table: Optional[str] = None
    mesh: Optional[str] = None
    group: Optional[str] = None
    p: int = 3
    q: int = 2

    @field_validator("out")
    @classmethod
    def output_directory_is_writable(cls, out: Path) -> Path:
        if not out.is_dir():
            raise ValueError(f"output directory {out} does not exist")
        if not os.access(out, os.W_OK):
            raise ValueError(f"output directory {out} is not writable")
        return out

    @field_validator("samples")
    @classmethod
    def enough_samples(cls, samples: int) -> int:
        if samples < 3:
            raise ValueError(f"samples must be at least 3, got {samples}")
        return samples


def build_config(out: Optional[str] = None, **values: object) -> RunConfig:
    """Resolves the output directory (--out, then MEREON_OUT, then cwd) and validates the rest."""
    try:
        return RunConfig(out=get_output_dir(out), **values)  # type: ignore[arg-type]
    except ValidationError as e:
        details = "; ".join(error["msg"] for error in e.errors())
        raise UsageError(details) from e
