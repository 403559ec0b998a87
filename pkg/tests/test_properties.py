"""
Invariants of the conflict measure checked over generated evidence.

Endpoints are drawn on a quarter-unit grid in [0, 100] so that a non-degenerate
span is never shorter than 0.25; float rounding of shifted or scaled endpoints
then stays far below the 1e-9 tolerance.
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from measures.conflict import (
    conflict,
    conflict_raw,
    grid_oracle,
    induced_partition,
    validate_evidence,
    weighted_uncovered_length,
)
from measures.lattice import full_lattice
from models import SourceSubset

TOL = 1e-9
_endpoint = st.integers(min_value=0, max_value=400).map(lambda v: v / 4)


@st.composite
def evidence_sets(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    raw = []
    for source_id in range(1, n + 1):
        a, b = draw(_endpoint), draw(_endpoint)
        raw.append((source_id, min(a, b), max(a, b)))
    return validate_evidence(raw)


def multi_source_subsets(ev):
    return [SourceSubset(m) for m in range(1, 1 << ev.n) if SourceSubset(m).size >= 2]


def assert_lattices_match(left, right, key_map=lambda mask: mask):
    assert len(left) == len(right)
    for mask, value in left.values.items():
        assert right[key_map(mask)] == pytest.approx(value, abs=TOL)


@given(evidence_sets())
@settings(max_examples=50)
def test_values_lie_in_unit_interval(ev):
    for subset, value in full_lattice(ev).items():
        assert 0.0 <= value <= 1.0
        if subset.size == 1:
            assert value == 0.0


@given(evidence_sets(min_n=2))
@settings(max_examples=50)
def test_conflict_is_one_minus_mean_length_over_span(ev):
    for subset in multi_source_subsets(ev):
        lows, highs = ev.bounds(subset)
        span = highs.max() - lows.min()
        if span == 0:
            continue
        expected = 1.0 - (highs - lows).sum() / (subset.size * span)
        assert conflict(ev, subset) == pytest.approx(expected, abs=TOL)


@given(evidence_sets(), st.floats(min_value=-1000, max_value=1000, allow_nan=False))
@settings(max_examples=50)
def test_translation_invariance(ev, offset):
    assert_lattices_match(full_lattice(ev), full_lattice(ev.shifted(offset)))


@given(evidence_sets(), st.floats(min_value=1e-3, max_value=1e3))
@settings(max_examples=50)
def test_positive_scale_invariance(ev, factor):
    assert_lattices_match(full_lattice(ev), full_lattice(ev.scaled(factor)))


@given(evidence_sets(min_n=2), st.randoms(use_true_random=False))
@settings(max_examples=50)
def test_label_permutation_invariance(ev, rnd):
    new_ids = list(ev.ids)
    rnd.shuffle(new_ids)
    mapping = dict(zip(ev.ids, new_ids))

    def relabel(mask):
        return SourceSubset.from_ids(mapping[i] for i in SourceSubset(mask).members).mask

    assert_lattices_match(full_lattice(ev), full_lattice(ev.relabelled(mapping)), relabel)


@given(evidence_sets(min_n=2), st.lists(_endpoint, max_size=8))
@settings(max_examples=50)
def test_refinement_invariance(ev, extra_cuts):
    all_endpoints = ev.endpoints()
    for subset in multi_source_subsets(ev):
        base = conflict_raw(ev, subset)
        with_all = weighted_uncovered_length(induced_partition(ev, subset, cuts=all_endpoints), subset.size)
        with_extra = weighted_uncovered_length(
            induced_partition(ev, subset, cuts=list(all_endpoints) + extra_cuts), subset.size)
        assert with_all == pytest.approx(base, abs=TOL)
        assert with_extra == pytest.approx(base, abs=TOL)


@given(evidence_sets())
@settings(max_examples=50)
def test_partition_is_well_formed(ev):
    for mask in range(1, 1 << ev.n):
        partition = induced_partition(ev, SourceSubset(mask))
        size = SourceSubset(mask).size
        cells = partition.cells
        assert all(c.length > 0 for c in cells)
        assert all(0 <= c.overlap_count <= size for c in cells)
        assert all(a.hi == b.lo for a, b in zip(cells, cells[1:]))
        if cells:
            assert cells[0].lo == partition.span_lo
            assert cells[-1].hi == partition.span_hi
        assert sum(c.length for c in cells) == pytest.approx(partition.span, abs=TOL)


@given(evidence_sets(min_n=2))
@settings(max_examples=50)
def test_identical_intervals_collapse(ev):
    interval = ev.interval(1)
    clones = validate_evidence((i, interval.lo, interval.hi) for i in ev.ids)
    for subset in multi_source_subsets(clones):
        assert conflict(clones, subset) == 0.0


@pytest.mark.slow
@pytest.mark.parametrize('seed', range(200))
def test_oracle_agreement(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7))
    endpoints = np.sort(rng.uniform(0.0, 100.0, size=(n, 2)), axis=1)
    ev = validate_evidence((i + 1, lo, hi) for i, (lo, hi) in enumerate(endpoints))
    for size in range(2, n + 1):
        for members in itertools.combinations(ev.ids, size):
            subset = SourceSubset.from_ids(members)
            assert abs(conflict(ev, subset) - grid_oracle(ev, subset, 10 ** 6)) <= 1e-3
