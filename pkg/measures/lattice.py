#!/usr/bin/env python3
"""
Conflict Lattice - Subset Lattice
Conflict of every non-empty source subset, the normal/fuzzy measure checks
and leave-one-out identification of the most conflicting source.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import List

from config import LATTICE_SOURCE_CEILING
from errors import TooFewSources, TooManySources
from measures.conflict import conflict
from models import (
    ConflictLattice,
    DeltaReport,
    EvidenceSet,
    Increment,
    MonotonicityReport,
    NormalReport,
    SourceSubset,
    Violation,
)
from utils.event_log import log_event

DEFAULT_TOLERANCE = 1e-9


def full_lattice(ev: EvidenceSet, max_sources: int = LATTICE_SOURCE_CEILING,
                 workers: int = 1) -> ConflictLattice:
    """
    Evaluate conflict for all 2^n - 1 non-empty subsets of ``ev``.

    Args:
        ev: validated evidence
        max_sources: enumeration guard, capped at 24
        workers: thread pool size; 1 evaluates sequentially

    Raises:
        TooManySources: when n exceeds the guard
    """
    limit = min(max_sources, LATTICE_SOURCE_CEILING)
    if ev.n > limit:
        raise TooManySources(ev.n, limit)

    masks = range(1, 1 << ev.n)

    def evaluate(mask):
        return conflict(ev, SourceSubset(mask))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = dict(zip(masks, pool.map(evaluate, masks)))
    else:
        values = {mask: evaluate(mask) for mask in masks}

    log_event('DEBUG', 'LATTICE', 'full_lattice',
              f'evaluated {len(values)} subsets of {ev.n} sources', details=f'workers={workers}')
    return ConflictLattice(ev.n, values)


def leave_one_out(lat: ConflictLattice, tol: float = DEFAULT_TOLERANCE) -> DeltaReport:
    """
    delta[j] = g(X) - g(X without j) for every source j.

    All sources within ``tol`` of the largest delta are reported, ascending.
    """
    if lat.n < 2:
        raise TooFewSources(lat.n)

    full = lat.full
    top = lat[full]
    deltas = {j: top - lat[full.without(j)] for j in full.members}
    best = max(deltas.values())
    argmax_ids = tuple(j for j in sorted(deltas) if math.isclose(deltas[j], best, rel_tol=0.0, abs_tol=tol))

    log_event('DEBUG', 'LATTICE', 'leave_one_out',
              f"most conflicting: {', '.join(f'x{j}' for j in argmax_ids)}", details=f'delta={best:.6f}')
    return DeltaReport(deltas, argmax_ids)


def check_normal(lat: ConflictLattice, tol: float = DEFAULT_TOLERANCE) -> NormalReport:
    """Minimal-set and maximal-set conditions of a normal measure."""
    # the empty set is 0 by construction, so only singletons can fail
    minimal_ok = all(value <= tol for _, value in lat.layer(1))
    max_value = lat.max_value
    return NormalReport(minimal_ok, max_value, max_value >= 1.0 - tol)


def _covering_pairs(lat: ConflictLattice):
    """Yield (A, A + {j}, j) for every non-empty A and every j outside it."""
    for subset in lat.subsets():
        for j in range(1, lat.n + 1):
            if j not in subset:
                yield subset, subset.plus(j), j


def check_monotone(lat: ConflictLattice, tol: float = DEFAULT_TOLERANCE) -> MonotonicityReport:
    """
    Look for A < B with g(A) > g(B) + tol.

    Pairs that differ by one source are enough: any decreasing chain contains
    a decreasing step.
    """
    violations = tuple(
        Violation(a, b, lat[a], lat[b])
        for a, b, _ in _covering_pairs(lat)
        if lat[a] > lat[b] + tol
    )
    if violations:
        log_event('DEBUG', 'LATTICE', 'check_monotone', f'{len(violations)} monotonicity violations')
    return MonotonicityReport(violations)


def rank_increments(lat: ConflictLattice, exclude_singletons: bool = True) -> List[Increment]:
    """
    Every one-source step up the lattice, largest increase first.

    With ``exclude_singletons`` the steps starting from a single source are
    skipped, since every singleton scores 0 and any pair looks like a jump.
    """
    increments = [
        Increment(a, b, j, lat[b] - lat[a])
        for a, b, j in _covering_pairs(lat)
        if not (exclude_singletons and a.size == 1)
    ]
    increments.sort(key=lambda inc: (-inc.delta, inc.superset.sort_key, inc.added_source))
    return increments
