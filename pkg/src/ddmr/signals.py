"""Time-series containers, CSV ingestion, and Hankel matrix construction."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "TimeSeries",
    "DataSet",
    "load_csv",
    "save_csv",
    "hankel",
    "hankel_trimmed",
]


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A finite real-valued signal sampled at t = 0, 1, ..., T."""

    samples: np.ndarray

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return np.array_equal(self.samples, other.samples)

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.samples, dtype=float))
        if arr.ndim != 1:
            raise ValueError("a time series must be one-dimensional")
        if arr.size < 1:
            raise ValueError("a time series needs at least one sample")
        if not np.all(np.isfinite(arr)):
            raise ValueError("time series samples must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def horizon(self) -> int:
        """Index T of the last sample."""
        return self.samples.size - 1


@dataclass(frozen=True)
class DataSet:
    """An input-output record (U, Y) sharing one time horizon."""

    input: TimeSeries
    output: TimeSeries

    def __post_init__(self) -> None:
        if len(self.input) != len(self.output):
            raise ValueError(
                "input and output must share the horizon: "
                f"{len(self.input)} vs {len(self.output)} samples"
            )

    @property
    def horizon(self) -> int:
        return self.input.horizon

    def scaled(self, alpha: float) -> "DataSet":
        """Return (alpha*U, alpha*Y); useful for invariance checks."""
        return DataSet(
            TimeSeries(alpha * self.input.samples),
            TimeSeries(alpha * self.output.samples),
        )


def load_csv(path: str | Path) -> DataSet:
    """Read a ``t,u,y`` CSV file into a :class:`DataSet`.

    The header row must be exactly ``t,u,y``. Time indices must run
    0, 1, 2, ... with no gaps, and every value must parse as a finite
    float. Errors name the offending file row (the header is row 1).
    """
    path = Path(path)
    us: list[float] = []
    ys: list[float] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected header 't,u,y'") from None
        if [h.strip() for h in header] != ["t", "u", "y"]:
            raise ValueError(f"{path}: expected header 't,u,y', got {','.join(header)!r}")
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise ValueError(f"{path}: malformed row {row_no}: expected 3 fields, got {len(row)}")
            try:
                t = int(row[0])
            except ValueError:
                raise ValueError(f"{path}: malformed time index at row {row_no}: {row[0]!r}") from None
            if t != len(us):
                raise ValueError(
                    f"{path}: non-contiguous time index at row {row_no}: expected t={len(us)}, got t={t}"
                )
            for name, cell, dest in (("u", row[1], us), ("y", row[2], ys)):
                try:
                    value = float(cell)
                except ValueError:
                    raise ValueError(
                        f"{path}: malformed value in column '{name}' at row {row_no}: {cell!r}"
                    ) from None
                if not math.isfinite(value):
                    raise ValueError(f"{path}: non-finite value in column '{name}' at row {row_no}")
                dest.append(value)
    if not us:
        raise ValueError(f"{path}: no data rows")
    return DataSet(TimeSeries(np.array(us)), TimeSeries(np.array(ys)))


def save_csv(data: DataSet, path: str | Path) -> None:
    """Write a :class:`DataSet` as ``t,u,y`` rows.

    Floats are written in shortest round-trip form, so a load/save cycle
    preserves the sample values exactly.
    """
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "u", "y"])
        for t, (u, y) in enumerate(zip(data.input.samples, data.output.samples)):
            writer.writerow([t, repr(float(u)), repr(float(y))])


def hankel(series: TimeSeries, depth: int) -> np.ndarray:
    """Hankel matrix of a signal: entry (i, j) equals ``samples[i + j]``.

    The result has shape ``(depth + 1, T - depth + 1)``; row i is the
    window ``samples[i : i + T - depth + 1]``, so anti-diagonals are
    constant. Depth 0 yields the signal as a single row.
    """
    T = series.horizon
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > T:
        raise ValueError(f"depth exceeds data horizon: depth={depth}, T={T}")
    width = T - depth + 1
    windows = np.lib.stride_tricks.sliding_window_view(series.samples, width)
    return windows[: depth + 1].copy()


def hankel_trimmed(series: TimeSeries, order: int) -> np.ndarray:
    """``hankel(series, order)`` with its last row removed.

    Shape is ``(order, T - order + 1)``; requires ``order >= 1``.
    """
    if order < 1:
        raise ValueError("order must be positive")
    return hankel(series, order)[:-1]
