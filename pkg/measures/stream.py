#!/usr/bin/env python3
"""
Conflict Lattice - Sliding Windows
Turns multi-sensor time series into per-window interval evidence
([min, max] of each sensor's readings in the window) and scores each window.
"""

from __future__ import annotations

from typing import Iterator, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from errors import EmptySeries, EmptySubset, InvalidWindow, WindowTooLong
from measures.conflict import conflict
from models import (
    ConflictSeries,
    EvidenceSet,
    Interval,
    SensorSeries,
    SeriesSummary,
    SourceSubset,
    WindowConfig,
)
from utils.event_log import log_event


def _check_window(series: SensorSeries, cfg: WindowConfig):
    if series.length == 0:
        raise EmptySeries()
    if cfg.window_len < 1:
        raise InvalidWindow(f'window length must be at least 1 sample, got {cfg.window_len}')
    if cfg.stride < 1:
        raise InvalidWindow(f'stride must be at least 1 sample, got {cfg.stride}')
    if cfg.window_len > series.length:
        raise WindowTooLong(cfg.window_len, series.length)


def window_count(length: int, window_len: int, stride: int) -> int:
    return (length - window_len) // stride + 1


def window_len_for_seconds(series: SensorSeries, seconds: float) -> int:
    """Convert a window duration to samples using the median sampling interval."""
    if seconds <= 0:
        raise InvalidWindow(f'window duration must be positive, got {seconds}')
    step = series.median_interval()
    if step <= 0:
        return 1
    return max(1, int(round(seconds / step)))


def windows(series: SensorSeries, cfg: WindowConfig) -> Iterator[Tuple[float, EvidenceSet]]:
    """
    Yield ``(end_time, evidence)`` for each window position.

    The first window covers samples 1..window_len and every window is labelled
    with the timestamp of its last sample.
    """
    _check_window(series, cfg)

    view = sliding_window_view(series.readings, cfg.window_len, axis=1)[:, ::cfg.stride]
    lows = view.min(axis=2)
    highs = view.max(axis=2)
    end_times = series.timestamps[cfg.window_len - 1::cfg.stride]

    for k, end_time in enumerate(end_times):
        sources = tuple(
            (source_id, Interval(lows[row, k], highs[row, k]))
            for row, source_id in enumerate(series.source_ids)
        )
        yield float(end_time), EvidenceSet(sources)


def conflict_series(series: SensorSeries, cfg: WindowConfig) -> ConflictSeries:
    """Conflict of ``cfg.subset`` (all sensors when unset) in every window."""
    subset = cfg.subset if cfg.subset is not None else SourceSubset.full(series.n)
    if subset.size == 0:
        raise EmptySubset()
    for source_id in subset:
        series.row_of(source_id)

    times, values = [], []
    for end_time, evidence in windows(series, cfg):
        times.append(end_time)
        values.append(conflict(evidence, subset))

    log_event('DEBUG', 'STREAM', 'conflict_series',
              f'{len(values)} windows of {cfg.window_len} samples for {subset.label}',
              details=f'stride={cfg.stride}')
    return ConflictSeries(np.array(times), np.array(values))


def summarize(cs: ConflictSeries) -> SeriesSummary:
    """Population mean/variance and the earliest time of the maximum."""
    if len(cs) == 0:
        raise EmptySeries('conflict series')
    values = cs.values
    peak = int(np.argmax(values))
    return SeriesSummary(
        mean=float(np.mean(values)),
        variance=float(np.var(values)),
        max=float(values[peak]),
        argmax_time=float(cs.times[peak]),
    )
