"""Reading and writing signals.

JSON is ``{"p": int, "re": [...], "im": [...]}``; CSV is p lines of ``re,im``.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .signal import as_signal

__all__ = [
    "SignalFormatError",
    "signal_to_dict",
    "signal_from_dict",
    "dumps_signal",
    "loads_signal",
    "read_signal",
    "write_signal",
]


class SignalFormatError(ValueError):
    """A signal file could not be parsed; the message names the offending field or line."""


def signal_to_dict(x) -> dict:
    x = as_signal(x)
    return {"p": int(x.shape[0]), "re": x.real.tolist(), "im": x.imag.tolist()}


def signal_from_dict(data) -> np.ndarray:
    if not isinstance(data, dict):
        raise SignalFormatError("top-level JSON value must be an object")
    for key in ("p", "re", "im"):
        if key not in data:
            raise SignalFormatError(f"missing field {key!r}")
    p = data["p"]
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise SignalFormatError(f"field 'p' must be a positive integer, got {p!r}")
    parts = []
    for key in ("re", "im"):
        values = data[key]
        if not isinstance(values, list):
            raise SignalFormatError(f"field {key!r} must be a list")
        if len(values) != p:
            raise SignalFormatError(f"field {key!r} has {len(values)} entries, expected p={p}")
        for i, v in enumerate(values):
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not np.isfinite(v):
                raise SignalFormatError(f"field {key!r}[{i}] is not a finite number: {v!r}")
        parts.append(np.asarray(values, dtype=float))
    return parts[0] + 1j * parts[1]


def dumps_signal(x, fmt: str = "json") -> str:
    x = as_signal(x)
    if fmt == "json":
        return json.dumps(signal_to_dict(x)) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for v in x:
            writer.writerow([repr(float(v.real)), repr(float(v.imag))])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def _loads_csv(text: str) -> np.ndarray:
    values = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise SignalFormatError(f"line {lineno}: expected 2 fields 're,im', got {len(row)}")
        try:
            re, im = (float(cell) for cell in row)
        except ValueError:
            raise SignalFormatError(f"line {lineno}: not a number: {','.join(row)!r}") from None
        if not (np.isfinite(re) and np.isfinite(im)):
            raise SignalFormatError(f"line {lineno}: non-finite value")
        values.append(complex(re, im))
    if not values:
        raise SignalFormatError("empty signal file")
    return np.asarray(values, dtype=np.complex128)


def loads_signal(text: str, fmt: str | None = None) -> np.ndarray:
    """Parse a signal; with ``fmt=None`` JSON is assumed when the text starts with ``{``."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "csv"
    if fmt == "csv":
        return _loads_csv(text)
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SignalFormatError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
        return signal_from_dict(data)
    raise ValueError(f"unknown format {fmt!r}")


def read_signal(path, p: int | None = None) -> np.ndarray:
    """Load a signal file, checking its length against ``p`` when given."""
    path = Path(path)
    fmt = "csv" if path.suffix.lower() == ".csv" else None
    x = loads_signal(path.read_text(), fmt)
    if p is not None and x.shape[0] != p:
        raise SignalFormatError(f"{path}: signal has length {x.shape[0]}, expected p={p}")
    return x


def write_signal(path, x, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "csv" if path.suffix.lower() == ".csv" else "json"
    path.write_text(dumps_signal(x, fmt))
