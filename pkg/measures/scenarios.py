#!/usr/bin/env python3
"""
Conflict Lattice - Scenarios
The three built-in four-source examples and a synthetic sensor-drift generator.

Drift generator (fixed, so fixtures are reproducible anywhere):
  * sensor j draws its noise from numpy's PCG64 bit generator seeded with
    ``SeedSequence([seed, j])``, one ``uniform(-a, a, T)`` call per sensor;
  * reading(j, k) = baseline + noise(j, k) + offset(k) for the drifting
    sensor, baseline + noise(j, k) for the others;
  * offset(k) is 0 for k <= drift_start, rises linearly to drift_magnitude at
    k = drift_end and stays there (k is the 0-based sample index).
"""

from __future__ import annotations

import numpy as np

from errors import UnknownExample
from measures.conflict import validate_evidence
from models import DriftScenarioConfig, EvidenceSet, SensorSeries
from utils.event_log import log_event

# (lo, hi) of sources x1..x4
BUILTIN_EXAMPLES = {
    1: ((0, 12), (0, 4), (0, 3), (0, 2)),    # small conflict, nested intervals
    2: ((10, 12), (1, 4), (1, 3), (0, 2)),   # moderate: x1 overlaps nobody
    3: ((10, 12), (4, 7), (2, 4), (0, 2)),   # extreme: no two sources overlap
}


def paper_example(k: int) -> EvidenceSet:
    """Evidence of built-in example ``k`` (1, 2 or 3)."""
    try:
        bounds = BUILTIN_EXAMPLES[int(k)]
    except (KeyError, TypeError, ValueError):
        raise UnknownExample(k) from None
    return validate_evidence((i + 1, lo, hi) for i, (lo, hi) in enumerate(bounds))


def drift_envelope(cfg: DriftScenarioConfig) -> np.ndarray:
    """Offset added to the drifting sensor at each sample; independent of the seed."""
    cfg.validate()
    k = np.arange(cfg.duration_samples, dtype=float)
    ramp = (k - cfg.drift_start) / (cfg.drift_end - cfg.drift_start)
    return cfg.drift_magnitude * np.clip(ramp, 0.0, 1.0)


def gen_drift(cfg: DriftScenarioConfig) -> SensorSeries:
    """Generate the synthetic drift series described by ``cfg``."""
    cfg.validate()
    length = cfg.duration_samples
    timestamps = cfg.sample_period * np.arange(1, length + 1, dtype=float)

    readings = np.empty((cfg.n_sensors, length))
    for row in range(cfg.n_sensors):
        sensor_id = row + 1
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([cfg.seed, sensor_id])))
        noise = rng.uniform(-cfg.noise_amplitude, cfg.noise_amplitude, length)
        readings[row] = cfg.baseline + noise

    readings[cfg.drifting_sensor - 1] += drift_envelope(cfg)

    log_event('DEBUG', 'SCENARIO', 'gen_drift',
              f'{cfg.n_sensors} sensors x {length} samples, x{cfg.drifting_sensor} drifts '
              f'{cfg.drift_magnitude:+g} over samples {cfg.drift_start}-{cfg.drift_end}',
              details=f'seed={cfg.seed}')
    return SensorSeries(timestamps, readings)
