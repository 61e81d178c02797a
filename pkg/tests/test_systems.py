from __future__ import annotations

import pytest
from hypothesis import given, settings

from addsys.errors import BoundTooSmall, InvalidSystem
from addsys.sets import NATURALS, dilated, finite, interval
from addsys.systems import (
    AdditiveSystem,
    DuplicateRepresentation,
    MissingRepresentation,
    OverlapViolation,
    Representation,
    Valid,
    representations_of,
    subfamily_rigidity_check,
    systems_equal,
    verify,
)
from conftest import load, small_systems
from oracles import elements, first_failure


def monetary():
    return AdditiveSystem.of(
        {"M1": interval(12), "M2": dilated(12, interval(20)), "M3": dilated(240, NATURALS)}
    )


def test_835_has_one_representation():
    reps = representations_of(monetary(), 835)
    assert reps == [Representation((("M1", 7), ("M2", 108), ("M3", 720)))]


def test_monetary_valid():
    report = verify(monetary(), 480)
    assert report.verdict == Valid()
    assert str(report) == "Valid up to 480"


def test_decimal_valid():
    sys = AdditiveSystem.of({"u": interval(10), "t": dilated(10, NATURALS)})
    assert verify(sys, 10_000).ok


def test_dropping_a_member():
    assert verify(monetary().without("M2"), 480).verdict == MissingRepresentation(12)
    assert subfamily_rigidity_check(monetary(), "M3", 480).verdict == MissingRepresentation(240)
    decimal = AdditiveSystem.of({"u": interval(10), "t": dilated(10, NATURALS)})
    assert subfamily_rigidity_check(decimal, "t", 100).verdict == MissingRepresentation(10)


def test_rigidity_bound_too_small():
    with pytest.raises(BoundTooSmall):
        subfamily_rigidity_check(monetary(), "M3", 240)


def test_overlap_reported():
    sys = AdditiveSystem.of({"a": finite([0, 1, 2]), "b": finite([0, 2]), "c": dilated(4, NATURALS)})
    assert verify(sys, 50).verdict == OverlapViolation("a", "b", 2)


def test_duplicate_reported_with_two_representations():
    sys = AdditiveSystem.of({"a": finite([0, 1, 3]), "b": finite([0, 2]), "c": dilated(4, NATURALS)})
    v = verify(sys, 50).verdict
    assert isinstance(v, DuplicateRepresentation)
    assert v.n == 3
    assert v.rep1 != v.rep2 and v.rep1.value == v.rep2.value == 3


def test_local_rules():
    with pytest.raises(InvalidSystem):
        AdditiveSystem.of({"a": finite([0])})
    with pytest.raises(InvalidSystem):
        AdditiveSystem.of({"a": NATURALS, "b": finite([0, 1])})
    with pytest.raises(InvalidSystem):
        AdditiveSystem((("a", interval(2)), ("a", interval(3))))
    with pytest.raises(InvalidSystem):
        AdditiveSystem(((True, interval(2)),))


def test_systems_equal_matches_by_label():
    a = AdditiveSystem.of({"x": interval(2), "y": dilated(2, NATURALS)})
    b = AdditiveSystem.of({"y": dilated(2, NATURALS), "x": finite([0, 1])})
    assert systems_equal(a, b, 100)
    assert not systems_equal(a, AdditiveSystem.of({"x": interval(2), "z": dilated(2, NATURALS)}), 100)


@pytest.mark.parametrize("name", ["monetary.sys", "decimal.sys", "parity.sys", "binary.sys", "tenadic.sys", "merged.sys"])
def test_corpus_valid(name):
    assert verify(load(name), 10_000).ok


def _agrees_with_oracle(sys, bound):
    report = verify(sys, bound)
    failure = first_failure([elements(s, bound) for _, s in sys], bound)
    if failure is None:
        return report.ok
    n, count = failure
    v = report.verdict
    if count == 0:
        return v == MissingRepresentation(n)
    return isinstance(v, (DuplicateRepresentation, OverlapViolation)) and v.n == n


@settings(max_examples=60, deadline=None)
@given(small_systems())
def test_verify_agrees_with_brute_force(sys):
    assert _agrees_with_oracle(sys, 120)


@settings(max_examples=60, deadline=None)
@given(small_systems())
def test_broken_systems_agree_with_brute_force(sys):
    if len(sys) > 1:
        assert _agrees_with_oracle(sys.without(sys.labels[-1]), 120)
    extra = AdditiveSystem(sys.members + (("extra", finite([0, 3])),))
    assert _agrees_with_oracle(extra, 120)


@settings(max_examples=40, deadline=None)
@given(small_systems())
def test_every_deletion_misses_least_positive(sys):
    from addsys.sets import least_positive

    if len(sys) < 2:
        return
    for lbl, s in sys:
        m = least_positive(s)
        assert subfamily_rigidity_check(sys, lbl, m + 1).verdict == MissingRepresentation(m)
