#!/usr/bin/env python3
"""
Conflict Lattice - Domain Models
Immutable value types shared by the measure library, the CLI and the API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from errors import (
    DuplicateId,
    EmptyInput,
    EmptySeries,
    InvalidConfig,
    InvalidInterval,
    InvalidSeries,
    NonContiguousIds,
    NonFiniteValue,
    NonIncreasingTime,
    UnknownSourceInSubset,
)


def _frozen_array(values, dtype=float):
    """Copy values into a read-only numpy array."""
    array = np.array(values, dtype=dtype)
    array.flags.writeable = False
    return array


def source_label(source_id: int) -> str:
    return f'x{source_id}'


# ---------------------------------------------------------------------------
# Evidence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] reported by one source."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
            raise InvalidInterval(self.lo, self.hi)
        object.__setattr__(self, 'lo', lo)
        object.__setattr__(self, 'hi', hi)

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def shifted(self, offset: float) -> Interval:
        return Interval(self.lo + offset, self.hi + offset)

    def scaled(self, factor: float) -> Interval:
        return Interval(self.lo * factor, self.hi * factor)

    def to_dict(self):
        return {'lo': self.lo, 'hi': self.hi}

    def __repr__(self):
        return f'[{self.lo:g}, {self.hi:g}]'


@dataclass(frozen=True, order=True)
class SourceSubset:
    """A set of source ids stored as a bit pattern (bit k is source k + 1)."""

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError('subset mask must be non-negative')

    @classmethod
    def of(cls, *source_ids: int) -> SourceSubset:
        return cls.from_ids(source_ids)

    @classmethod
    def from_ids(cls, source_ids: Iterable[int]) -> SourceSubset:
        mask = 0
        for source_id in source_ids:
            if source_id < 1:
                raise ValueError(f'source ids start at 1, got {source_id}')
            mask |= 1 << (source_id - 1)
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> SourceSubset:
        return cls((1 << n) - 1)

    @property
    def members(self) -> Tuple[int, ...]:
        mask, bit, ids = self.mask, 1, []
        while mask:
            if mask & 1:
                ids.append(bit)
            mask >>= 1
            bit += 1
        return tuple(ids)

    @property
    def size(self) -> int:
        return bin(self.mask).count('1')

    @property
    def label(self) -> str:
        """Subset rendered as e.g. ``x1+x2+x3``; the empty set is ``{}``."""
        return '+'.join(source_label(i) for i in self.members) or '{}'

    @property
    def sort_key(self):
        return self.size, self.members

    def without(self, source_id: int) -> SourceSubset:
        return SourceSubset(self.mask & ~(1 << (source_id - 1)))

    def plus(self, source_id: int) -> SourceSubset:
        return SourceSubset(self.mask | (1 << (source_id - 1)))

    def issubset(self, other: SourceSubset) -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, source_id) -> bool:
        return source_id >= 1 and bool(self.mask >> (source_id - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.size

    def __repr__(self):
        return f'SourceSubset({self.label})'


@dataclass(frozen=True)
class EvidenceSet:
    """Ordered, labelled interval evidence: the source set X."""

    sources: Tuple[Tuple[int, Interval], ...]
    _index: Mapping[int, Interval] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sources = tuple((int(source_id), interval) for source_id, interval in self.sources)
        if not sources:
            raise EmptyInput()
        index = {}
        for source_id, interval in sources:
            if source_id in index:
                raise DuplicateId(source_id)
            index[source_id] = interval
        if set(index) != set(range(1, len(sources) + 1)):
            raise NonContiguousIds(index)
        object.__setattr__(self, 'sources', sources)
        object.__setattr__(self, '_index', MappingProxyType(index))

    @classmethod
    def from_bounds(cls, lows: Sequence[float], highs: Sequence[float]) -> EvidenceSet:
        """Evidence with ids 1..n from parallel endpoint sequences."""
        return cls(tuple((k + 1, Interval(lo, hi)) for k, (lo, hi) in enumerate(zip(lows, highs))))

    @property
    def n(self) -> int:
        return len(self.sources)

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(source_id for source_id, _ in self.sources)

    def interval(self, source_id: int) -> Interval:
        try:
            return self._index[source_id]
        except KeyError:
            raise UnknownSourceInSubset(source_id, self.n) from None

    def full_subset(self) -> SourceSubset:
        return SourceSubset.full(self.n)

    def check_subset(self, subset: SourceSubset) -> None:
        if subset.mask >> self.n:
            stray = next(i for i in subset.members if i > self.n)
            raise UnknownSourceInSubset(stray, self.n)

    def bounds(self, subset: SourceSubset):
        """Left and right endpoints of the subset members as numpy arrays."""
        self.check_subset(subset)
        members = [self._index[i] for i in subset.members]
        lows = np.fromiter((iv.lo for iv in members), dtype=float, count=len(members))
        highs = np.fromiter((iv.hi for iv in members), dtype=float, count=len(members))
        return lows, highs

    def endpoints(self) -> np.ndarray:
        """Every endpoint of every source, sorted."""
        return np.sort(np.concatenate(self.bounds(self.full_subset())))

    def restrict(self, subset: SourceSubset) -> EvidenceSet:
        """Members of ``subset`` relabelled 1..k in ascending id order."""
        self.check_subset(subset)
        return EvidenceSet(tuple((k + 1, self._index[i]) for k, i in enumerate(subset.members)))

    def shifted(self, offset: float) -> EvidenceSet:
        return EvidenceSet(tuple((i, iv.shifted(offset)) for i, iv in self.sources))

    def scaled(self, factor: float) -> EvidenceSet:
        return EvidenceSet(tuple((i, iv.scaled(factor)) for i, iv in self.sources))

    def relabelled(self, mapping: Mapping[int, int]) -> EvidenceSet:
        """Same intervals under new ids; ``mapping`` sends old id to new id."""
        return EvidenceSet(tuple((mapping[i], iv) for i, iv in self.sources))

    def to_dict(self):
        return {'sources': [{'id': i, **iv.to_dict()} for i, iv in self.sources]}

    def __iter__(self):
        return iter(self.sources)

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class Scenario:
    """A named evidence set, as stored in a scenario file."""

    name: str
    evidence: EvidenceSet


# ---------------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionCell:
    lo: float
    hi: float
    overlap_count: int

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Partition:
    """Consecutive endpoint-bounded cells covering [span_lo, span_hi]."""

    cells: Tuple[PartitionCell, ...]
    span_lo: float
    span_hi: float

    @property
    def span(self) -> float:
        return self.span_hi - self.span_lo

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)


# ---------------------------------------------------------------------------
# Lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConflictLattice:
    """Conflict value of every non-empty subset of n sources.

    Keys are subset bit patterns; the empty set is implicit with value 0.
    """

    n: int
    values: Mapping[int, float]

    def __post_init__(self):
        object.__setattr__(self, 'values', MappingProxyType(dict(self.values)))

    def __getitem__(self, key) -> float:
        mask = key.mask if isinstance(key, SourceSubset) else int(key)
        if mask == 0:
            return 0.0
        return self.values[mask]

    def __len__(self):
        return len(self.values)

    @property
    def full(self) -> SourceSubset:
        return SourceSubset.full(self.n)

    def subsets(self) -> Tuple[SourceSubset, ...]:
        """Non-empty subsets ordered by (size, members)."""
        return tuple(sorted((SourceSubset(m) for m in self.values), key=lambda s: s.sort_key))

    def items(self):
        return tuple((subset, self.values[subset.mask]) for subset in self.subsets())

    def layer(self, size: int):
        return tuple((s, v) for s, v in self.items() if s.size == size)

    @property
    def max_value(self) -> float:
        return max(self.values.values(), default=0.0)


@dataclass(frozen=True)
class DeltaReport:
    """Leave-one-out differences g(X) - g(X without j) per source."""

    deltas: Mapping[int, float]
    argmax_ids: Tuple[int, ...]

    def to_dict(self):
        return {
            'deltas': {source_label(i): d for i, d in sorted(self.deltas.items())},
            'argmax': [source_label(i) for i in self.argmax_ids],
        }


@dataclass(frozen=True)
class NormalReport:
    minimal_ok: bool
    max_value: float
    attains_one: bool

    def to_dict(self):
        return {'minimal_ok': self.minimal_ok, 'max_value': self.max_value,
                'attains_one': self.attains_one}


@dataclass(frozen=True)
class Violation:
    subset: SourceSubset
    superset: SourceSubset
    subset_value: float
    superset_value: float

    def to_dict(self):
        return {'subset': self.subset.label, 'superset': self.superset.label,
                'subset_value': self.subset_value, 'superset_value': self.superset_value}


@dataclass(frozen=True)
class MonotonicityReport:
    violations: Tuple[Violation, ...]

    @property
    def is_monotone(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {'is_monotone': self.is_monotone,
                'violations': [v.to_dict() for v in self.violations]}


@dataclass(frozen=True)
class Increment:
    """Change in conflict when ``added_source`` joins ``subset``."""

    subset: SourceSubset
    superset: SourceSubset
    added_source: int
    delta: float

    def to_dict(self):
        return {'subset': self.subset.label, 'superset': self.superset.label,
                'added': source_label(self.added_source), 'delta': self.delta}


# ---------------------------------------------------------------------------
# Sensor series
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SensorSeries:
    """Rectangular multi-sensor readings; ``readings[k]`` belongs to source k + 1."""

    timestamps: np.ndarray
    readings: np.ndarray
    source_ids: Tuple[int, ...] = ()

    def __post_init__(self):
        timestamps = _frozen_array(self.timestamps)
        readings = _frozen_array(self.readings)
        if timestamps.ndim != 1 or timestamps.size == 0:
            raise EmptySeries()
        if readings.ndim == 1:
            readings = _frozen_array(readings[np.newaxis, :])
        if readings.ndim != 2 or readings.shape[0] == 0:
            raise EmptySeries('sensor set')
        if readings.shape[1] != timestamps.size:
            raise InvalidSeries(f'{readings.shape[1]} readings per sensor for '
                                f'{timestamps.size} timestamps')

        source_ids = tuple(self.source_ids) or tuple(range(1, readings.shape[0] + 1))
        if len(source_ids) != readings.shape[0]:
            raise InvalidSeries(f'{len(source_ids)} source ids for {readings.shape[0]} sensors')
        if sorted(source_ids) != list(range(1, len(source_ids) + 1)):
            raise NonContiguousIds(source_ids)

        bad_time = np.flatnonzero(~np.isfinite(timestamps))
        if bad_time.size:
            k = int(bad_time[0])
            raise NonFiniteValue(k + 1, 'time', float(timestamps[k]))
        steps = np.flatnonzero(np.diff(timestamps) <= 0)
        if steps.size:
            k = int(steps[0]) + 1
            raise NonIncreasingTime(k + 1, float(timestamps[k - 1]), float(timestamps[k]))
        bad = np.argwhere(~np.isfinite(readings))
        if bad.size:
            sensor, k = (int(v) for v in bad[0])
            raise NonFiniteValue(k + 1, f's{source_ids[sensor]}', float(readings[sensor, k]))

        object.__setattr__(self, 'timestamps', timestamps)
        object.__setattr__(self, 'readings', readings)
        object.__setattr__(self, 'source_ids', source_ids)

    @property
    def length(self) -> int:
        return int(self.timestamps.size)

    @property
    def n(self) -> int:
        return len(self.source_ids)

    def row_of(self, source_id: int) -> int:
        try:
            return self.source_ids.index(source_id)
        except ValueError:
            raise UnknownSourceInSubset(source_id, self.n) from None

    def restrict(self, subset: SourceSubset) -> SensorSeries:
        """Sensors of ``subset`` only, relabelled 1..k in ascending id order."""
        rows = [self.row_of(i) for i in subset.members]
        return SensorSeries(self.timestamps, self.readings[rows, :])

    def shifted(self, offset: float) -> SensorSeries:
        return SensorSeries(self.timestamps, self.readings + offset, self.source_ids)

    def median_interval(self) -> float:
        if self.length < 2:
            return 0.0
        return float(np.median(np.diff(self.timestamps)))

    def to_frame(self) -> pd.DataFrame:
        columns = {'time': self.timestamps}
        for row, source_id in sorted(enumerate(self.source_ids), key=lambda item: item[1]):
            columns[f's{source_id}'] = self.readings[row]
        return pd.DataFrame(columns)


@dataclass(frozen=True)
class WindowConfig:
    """Sliding window in samples; ``subset=None`` means every sensor."""

    window_len: int
    stride: int = 1
    subset: Optional[SourceSubset] = None


@dataclass(frozen=True, eq=False)
class ConflictSeries:
    """Conflict value per window, labelled by the window's end time."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'times', _frozen_array(self.times))
        object.__setattr__(self, 'values', _frozen_array(self.values))

    def __len__(self):
        return int(self.times.size)

    def __iter__(self):
        return zip(self.times.tolist(), self.values.tolist())

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'time': self.times, 'cf': self.values})


@dataclass(frozen=True)
class SeriesSummary:
    mean: float
    variance: float
    max: float
    argmax_time: float

    def to_dict(self):
        return {'mean': self.mean, 'variance': self.variance,
                'max': self.max, 'argmax_time': self.argmax_time}


# ---------------------------------------------------------------------------
# Scenarios
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DriftScenarioConfig:
    """Synthetic multi-sensor drift: baseline + uniform noise, one ramping sensor.

    Sample k (0-based) is taken at time ``sample_period * (k + 1)``. The
    drifting sensor's offset is 0 up to ``drift_start``, rises linearly to
    ``drift_magnitude`` at ``drift_end`` and holds from then on.
    """

    n_sensors: int = 4
    duration_samples: int = 90
    baseline: float = 22.0
    noise_amplitude: float = 0.2
    drifting_sensor: int = 1
    drift_start: int = 30
    drift_end: int = 70
    drift_magnitude: float = 8.0
    seed: int = 42
    sample_period: float = 1.0

    def validate(self) -> DriftScenarioConfig:
        if self.n_sensors < 1:
            raise InvalidConfig('n_sensors must be at least 1')
        if self.duration_samples < 1:
            raise InvalidConfig('duration_samples must be at least 1')
        if not 1 <= self.drifting_sensor <= self.n_sensors:
            raise InvalidConfig(f'drifting_sensor must lie in 1..{self.n_sensors}')
        if not 0 <= self.drift_start < self.drift_end <= self.duration_samples:
            raise InvalidConfig('need 0 <= drift_start < drift_end <= duration_samples')
        if not (math.isfinite(self.noise_amplitude) and self.noise_amplitude >= 0):
            raise InvalidConfig('noise_amplitude must be finite and non-negative')
        for name in ('baseline', 'drift_magnitude'):
            if not math.isfinite(getattr(self, name)):
                raise InvalidConfig(f'{name} must be finite')
        if not (math.isfinite(self.sample_period) and self.sample_period > 0):
            raise InvalidConfig('sample_period must be positive')
        if self.seed < 0:
            raise InvalidConfig('seed must be non-negative')
        return self
