"""CSV schema loading and provenance helpers."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np


class SchemaError(ValueError):
    """Input file does not match the documented artifact schema."""


def read_columns(path: str | Path, expected: list[str]) -> dict[str, np.ndarray]:
    """Load a CSV artifact, insisting on the exact expected header."""
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"{path}: file not found")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if header != expected:
            raise SchemaError(
                f"{path}: expected columns {expected}, found {header}"
            )
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(expected):
                raise SchemaError(f"{path}:{lineno}: expected {len(expected)} fields")
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                raise SchemaError(f"{path}:{lineno}: non-numeric value") from None
    data = np.array(rows, dtype=float).reshape(-1, len(expected))
    return {name: data[:, i] for i, name in enumerate(expected)}


def run_footer(in_dir: str | Path) -> str:
    """Provenance footer from the run manifest, if one sits next to the CSVs."""
    manifest = Path(in_dir) / "manifest.json"
    if not manifest.exists():
        return "no manifest"
    try:
        payload = json.loads(manifest.read_text())
    except json.JSONDecodeError:
        return "unreadable manifest"
    digest = payload.get("config_digest", "")[:12]
    seed = payload.get("master_seed", "?")
    return f"run {digest} seed {seed}"
