# swarm_sqp/io.py
"""
Trace and report files.

Traces are JSON Lines: one run per line (problem, seed, per-iteration
records). Paths ending in ".gz" are gzip-compressed.
"""

from __future__ import annotations

import gzip
import json
from pathlib import Path
from typing import IO, Any, Dict, Iterator, Optional, Union

import pandas as pd

from swarm_sqp.report import format_table

PathLike = Union[str, Path]


def _open(path: PathLike, mode: str) -> IO[str]:
    if str(path).endswith(".gz"):
        return gzip.open(path, mode + "t", compresslevel=3)
    return open(path, mode)


class TraceWriter:
    """
    Writes run traces as JSON Lines.

    Attributes:
        path (str): Output path; gzip when it ends in ".gz".
    """

    def __init__(self, path: PathLike, mode: str = "w") -> None:
        self.path = str(path)
        try:
            self.file = _open(self.path, mode)
        except OSError as e:
            raise RuntimeError(f"Cannot open trace file {self.path}") from e

    def write(self, trace: Dict[str, Any]) -> None:
        """Append one trace dict (RunTrace.to_dict() or similar)."""
        self.file.write(json.dumps(trace, sort_keys=True, allow_nan=False) + "\n")

    def close(self) -> None:
        self.file.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()


class TraceReader:
    """Iterator over the traces of a JSON Lines file."""

    def __init__(self, path: PathLike) -> None:
        self.path = str(path)
        self.file = _open(self.path, "r")

    def __iter__(self) -> Iterator[Dict[str, Any]]:
        return self

    def __next__(self) -> Dict[str, Any]:
        try:
            line = next(self.file)
            while not line.strip():
                line = next(self.file)
            return json.loads(line)
        except StopIteration:
            self.close()
            raise
        except Exception as e:
            self.close()
            raise RuntimeError(f"Error reading trace file {self.path}") from e

    def close(self) -> None:
        self.file.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()


def render_report(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return frame.to_json(orient="records", double_precision=15, indent=2) + "\n"
    if fmt == "csv":
        return frame.to_csv(index=False)
    if fmt == "text-table":
        return format_table(frame)
    raise ValueError(f"Unknown report format '{fmt}'")


def write_report(frame: pd.DataFrame, path: Optional[PathLike], fmt: str) -> str:
    """
    Render and, when `path` is given, write a report.

    Returns:
        str: The rendered document.
    """
    text = render_report(frame, fmt)
    if path is not None:
        try:
            with _open(path, "w") as fh:
                fh.write(text)
        except OSError as e:
            raise RuntimeError(f"Failed to write report {path}") from e
    return text
