"""Subset lattice: enumeration, identification and measure-property checks."""

import pytest

from errors import TooFewSources, TooManySources
from measures.conflict import conflict, validate_evidence
from measures.lattice import (
    check_monotone,
    check_normal,
    full_lattice,
    leave_one_out,
    rank_increments,
)
from models import SourceSubset

S = SourceSubset.of
TOL = 1e-9


def test_lattice_size_and_singletons(example1):
    lattice = full_lattice(example1)
    assert len(lattice) == 2 ** 4 - 1
    assert all(value == 0.0 for _, value in lattice.layer(1))
    assert lattice[SourceSubset(0)] == 0.0


def test_lattice_example1_values(example1):
    lattice = full_lattice(example1)
    assert lattice[S(1, 2, 3)] == pytest.approx(17 / 36, abs=TOL)
    assert lattice[S(1, 2, 4)] == pytest.approx(0.5, abs=TOL)
    assert lattice[S(1, 2, 4)] > lattice[S(1, 2, 3)]


def test_lattice_single_source():
    lattice = full_lattice(validate_evidence([(1, 2, 5)]))
    assert dict(lattice.values) == {1: 0.0}


def test_lattice_rejects_too_many_sources():
    ev = validate_evidence((i, 0, i) for i in range(1, 6))
    with pytest.raises(TooManySources):
        full_lattice(ev, max_sources=4)


def test_lattice_matches_direct_evaluation(example2):
    lattice = full_lattice(example2)
    for subset, value in lattice.items():
        assert value == conflict(example2, subset)


def test_lattice_is_the_same_with_a_thread_pool(example3):
    sequential = full_lattice(example3)
    pooled = full_lattice(example3, workers=4)
    assert dict(sequential.values) == dict(pooled.values)


def test_lattice_canonical_order(example1):
    order = [subset.members for subset in full_lattice(example1).subsets()]
    assert order[:5] == [(1,), (2,), (3,), (4,), (1, 2)]
    assert order[-1] == (1, 2, 3, 4)


# leave_one_out

def test_leave_one_out_example1(example1):
    report = leave_one_out(full_lattice(example1))
    assert report.argmax_ids == (1,)
    assert report.deltas[1] == pytest.approx(0.5625 - 0.25, abs=TOL)


def test_leave_one_out_example2(example2):
    assert leave_one_out(full_lattice(example2)).argmax_ids == (1,)


def test_leave_one_out_reports_ties():
    report = leave_one_out(full_lattice(validate_evidence([(1, 1, 4), (2, 1, 4)])))
    assert report.deltas == {1: 0.0, 2: 0.0}
    assert report.argmax_ids == (1, 2)


def test_leave_one_out_matches_recomputation(example3):
    lattice = full_lattice(example3)
    report = leave_one_out(lattice)
    full = example3.full_subset()
    for j, delta in report.deltas.items():
        assert delta == conflict(example3, full) - conflict(example3, full.without(j))


def test_leave_one_out_needs_two_sources():
    with pytest.raises(TooFewSources):
        leave_one_out(full_lattice(validate_evidence([(1, 0, 1)])))


# check_normal

def test_normal_example1(example1):
    report = check_normal(full_lattice(example1))
    assert report.minimal_ok
    assert not report.attains_one
    assert report.max_value == pytest.approx(0.5625, abs=TOL)


def test_normal_example3_maximum(example3):
    assert check_normal(full_lattice(example3)).max_value == pytest.approx(5 / 6, abs=1e-4)


def test_normal_single_source():
    report = check_normal(full_lattice(validate_evidence([(1, 0, 3)])))
    assert report.minimal_ok
    assert report.max_value == 0.0


def test_normal_attains_one_for_disjoint_points():
    report = check_normal(full_lattice(validate_evidence([(1, 0, 0), (2, 5, 5)])))
    assert report.attains_one


# check_monotone

def test_monotone_example1(example1):
    report = check_monotone(full_lattice(example1))
    assert report.is_monotone
    assert report.violations == ()


def test_monotone_witness():
    lattice = full_lattice(validate_evidence([(1, 0, 10), (2, 20, 30), (3, 0, 30)]))
    report = check_monotone(lattice)
    assert not report.is_monotone
    witness = [v for v in report.violations if v.subset == S(1, 2) and v.superset == S(1, 2, 3)]
    assert len(witness) == 1
    assert witness[0].subset_value == pytest.approx(2 / 3, abs=TOL)
    assert witness[0].superset_value == pytest.approx(4 / 9, abs=TOL)


def test_monotone_identical_intervals():
    lattice = full_lattice(validate_evidence([(1, 2, 3), (2, 2, 3), (3, 2, 3)]))
    assert check_monotone(lattice).is_monotone
    assert set(lattice.values.values()) == {0.0}


# built-in examples

def test_example3_upper_layers_at_least_half(example3):
    lattice = full_lattice(example3)
    for subset, value in lattice.items():
        if subset.size >= 2:
            assert value >= 0.5 - TOL
    # x2 and x3 touch at a single point, which lands exactly on 0.5
    assert lattice[S(2, 3)] == pytest.approx(0.5, abs=TOL)


def test_example3_bounds_the_other_examples(example1, example2, example3):
    top = full_lattice(example3)
    for mask, value in full_lattice(example1).values.items():
        assert value <= top[mask] + TOL

    # a narrower span lets example 2 outscore example 3 on these subsets
    exceptions = {
        S(1, 2).mask: (17 / 22, 11 / 16),
        S(1, 3).mask: (9 / 11, 4 / 5),
        S(1, 2, 3).mask: (26 / 33, 23 / 30),
    }
    for mask, value in full_lattice(example2).values.items():
        if mask in exceptions:
            second, third = exceptions[mask]
            assert value == pytest.approx(second, abs=TOL)
            assert top[mask] == pytest.approx(third, abs=TOL)
            assert value > top[mask]
        else:
            assert value <= top[mask] + TOL


def test_full_set_values(example1, example2, example3):
    assert full_lattice(example1)[S(1, 2, 3, 4)] == pytest.approx(0.5625, abs=TOL)
    assert full_lattice(example2)[S(1, 2, 3, 4)] == pytest.approx(0.8125, abs=TOL)
    assert full_lattice(example3)[S(1, 2, 3, 4)] == pytest.approx(0.8125, abs=TOL)


# rank_increments

def test_steepest_increment_example1(example1):
    steepest = rank_increments(full_lattice(example1))[0]
    assert steepest.subset == S(3, 4)
    assert steepest.superset == S(1, 3, 4)
    assert steepest.added_source == 1
    assert steepest.delta == pytest.approx(13 / 36, abs=TOL)


def test_increments_skip_singletons_by_default(example2):
    lattice = full_lattice(example2)
    assert all(inc.subset.size >= 2 for inc in rank_increments(lattice))
    with_singletons = rank_increments(lattice, exclude_singletons=False)
    assert any(inc.subset.size == 1 for inc in with_singletons)
    deltas = [inc.delta for inc in with_singletons]
    assert deltas == sorted(deltas, reverse=True)
