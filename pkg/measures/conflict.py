#!/usr/bin/env python3
"""
Conflict Lattice - Core Measure
Interval evidence validation, endpoint-induced partitions and the conflict
measure itself, plus a uniform-grid oracle used to cross-check the exact sweep.

Conflict of a subset A' of i >= 2 sources:

    raw(A')      = sum over cells P of |P| * (i - O(P)) / i
    conflict(A') = raw(A') / (max right endpoint - min left endpoint)

where the cells P come from the sorted endpoints of the members and O(P) is
the number of members whose interval contains P. Singletons score 0.
"""

from __future__ import annotations

import math
import numbers
from typing import Iterable, Optional

import numpy as np

from errors import (
    DuplicateId,
    EmptyInput,
    EmptySubset,
    InvalidInterval,
    InvalidSourceId,
    NonContiguousIds,
    SingletonSubset,
)
from models import EvidenceSet, Interval, Partition, PartitionCell, SourceSubset
from utils.event_log import log_event


def validate_evidence(raw: Iterable) -> EvidenceSet:
    """
    Turn raw ``(id, lo, hi)`` triples into an EvidenceSet.

    Input order is preserved. Ids must be unique and cover 1..n exactly.

    Raises:
        EmptyInput, InvalidSourceId, InvalidInterval, DuplicateId, NonContiguousIds
    """
    sources = []
    seen = set()
    for source_id, lo, hi in raw:
        if isinstance(source_id, bool) or not isinstance(source_id, numbers.Integral):
            raise InvalidSourceId(source_id)
        source_id = int(source_id)
        if source_id in seen:
            raise DuplicateId(source_id)
        seen.add(source_id)
        try:
            lo, hi = float(lo), float(hi)
        except (TypeError, ValueError):
            raise InvalidInterval(lo, hi, source_id) from None
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
            raise InvalidInterval(lo, hi, source_id)
        sources.append((source_id, Interval(lo, hi)))

    if not sources:
        raise EmptyInput()
    if seen != set(range(1, len(sources) + 1)):
        raise NonContiguousIds(seen)
    log_event('DEBUG', 'CORE', 'validate_evidence', f'{len(sources)} sources accepted')
    return EvidenceSet(tuple(sources))


def _require_members(ev: EvidenceSet, sub: SourceSubset, minimum: int):
    if sub.size == 0:
        raise EmptySubset()
    if sub.size < minimum:
        raise SingletonSubset()
    return ev.bounds(sub)


def induced_partition(ev: EvidenceSet, sub: SourceSubset,
                      cuts: Optional[Iterable[float]] = None) -> Partition:
    """
    Split the subset span at every member endpoint (and at any extra ``cuts``).

    Cut points outside [span_lo, span_hi] are discarded, duplicates collapse,
    so every cell has positive length. A source covers a cell iff its closed
    interval contains the whole closed cell.
    """
    lows, highs = _require_members(ev, sub, 1)
    span_lo, span_hi = float(lows.min()), float(highs.max())

    edges = np.concatenate([lows, highs])
    if cuts is not None:
        extra = np.fromiter(cuts, dtype=float)
        edges = np.concatenate([edges, extra[(extra >= span_lo) & (extra <= span_hi)]])
    edges = np.unique(edges)

    cell_lo, cell_hi = edges[:-1], edges[1:]
    covers = (lows[:, np.newaxis] <= cell_lo) & (cell_hi <= highs[:, np.newaxis])
    counts = covers.sum(axis=0)

    cells = tuple(PartitionCell(float(lo), float(hi), int(count))
                  for lo, hi, count in zip(cell_lo, cell_hi, counts))
    return Partition(cells, span_lo, span_hi)


def weighted_uncovered_length(partition: Partition, size: int) -> float:
    """Sum of |P| * (size - O(P)) / size over the cells of ``partition``."""
    if not partition.cells:
        return 0.0
    lengths = np.fromiter((c.length for c in partition), dtype=float)
    missing = np.fromiter((size - c.overlap_count for c in partition), dtype=float)
    return float(np.dot(lengths, missing) / size)


def conflict_raw(ev: EvidenceSet, sub: SourceSubset) -> float:
    """Un-normalized conflict of a subset of at least two sources."""
    _require_members(ev, sub, 2)
    return weighted_uncovered_length(induced_partition(ev, sub), sub.size)


def conflict(ev: EvidenceSet, sub: SourceSubset) -> float:
    """
    Normalized conflict of ``sub``, in [0, 1].

    The empty subset and singletons score 0. A subset whose intervals are all
    the same point has zero span and also scores 0.
    """
    ev.check_subset(sub)
    if sub.size < 2:
        return 0.0
    partition = induced_partition(ev, sub)
    if partition.span == 0:
        return 0.0
    raw = weighted_uncovered_length(partition, sub.size)
    return min(1.0, raw / partition.span)


def grid_oracle(ev: EvidenceSet, sub: SourceSubset, cells: int = 10 ** 6) -> float:
    """
    Approximate conflict by sampling the midpoints of ``cells`` equal slices.

    Each slice contributes width * (i - count) / i, where count is the number
    of members whose interval holds the slice midpoint. Summing those per
    source instead of per slice gives the same total, and each source's
    midpoint count has a closed form, so no grid is materialized.
    """
    if cells < 1:
        raise ValueError(f'cells must be a positive integer, got {cells}')
    lows, highs = _require_members(ev, sub, 2)
    span_lo, span_hi = float(lows.min()), float(highs.max())
    span = span_hi - span_lo
    if span == 0:
        return 0.0

    width = span / cells
    # midpoint k sits at span_lo + (k + 0.5) * width; count the k inside each closed interval
    first = np.clip(np.ceil((lows - span_lo) / width - 0.5), 0, cells)
    last = np.clip(np.floor((highs - span_lo) / width - 0.5), -1, cells - 1)
    covered = np.maximum(last - first + 1, 0)
    uncovered = sub.size * cells - int(covered.sum())
    return float(width * uncovered / sub.size / span)
