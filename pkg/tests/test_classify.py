from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addsys.classify import (
    BritishNumberSystem,
    Case,
    GeneratorSchedule,
    bns_equal,
    build_bns,
    classify,
    extraction_step,
    expand,
    is_decomposable_set,
    is_indecomposable_system,
    is_prime,
)
from addsys.errors import InsufficientSchedule, InvalidSystem, SingletonSystem
from addsys.sets import NATURALS, DirectSum, dilated, direct_sum, enumerate_set, finite, interval
from addsys.systems import AdditiveSystem, systems_equal, verify
from conftest import load, radix_lists, small_systems
from oracles import pair_decompositions

CORPUS = ["monetary.sys", "decimal.sys", "parity.sys", "binary.sys", "tenadic.sys", "merged.sys"]


def test_schedule_radices():
    s = GeneratorSchedule((12, 20), (2,))
    assert s.radices(4) == (12, 20, 2, 2)
    assert s.partial_product(3) == 480
    with pytest.raises(InsufficientSchedule):
        GeneratorSchedule((3, 5), ()).radix(3)


def test_schedule_canonical_form():
    a = GeneratorSchedule((2, 3), (2, 3, 2, 3))
    assert a.canonical() == GeneratorSchedule((), (2, 3))
    assert bns_equal(BritishNumberSystem(a), BritishNumberSystem(GeneratorSchedule((2,), (3, 2))))
    assert not bns_equal(BritishNumberSystem(a), BritishNumberSystem(GeneratorSchedule((), (3, 2))))
    assert GeneratorSchedule((2, 2, 2), (2,)).tail_kind == "constant"


def test_build_bns_monetary_and_binary():
    mon = build_bns(GeneratorSchedule((12, 20), (2,)), 2, closing_label="M3")
    assert mon.members == ((1, interval(12)), (2, dilated(12, interval(20))), ("M3", dilated(240, NATURALS)))
    binary = build_bns(GeneratorSchedule.constant(2), 4)
    expected = [finite([0, 1]), finite([0, 2]), finite([0, 4]), finite([0, 8]), dilated(16, NATURALS)]
    assert [enumerate_set(s, 100) for _, s in binary] == [enumerate_set(s, 100) for s in expected]


def test_step_dilation_case():
    step = extraction_step(load("monetary.sys"), 10_000)
    assert (step.pivot, step.radix, step.case) == ("pence", 12, Case.DILATION)
    assert step.quotient == AdditiveSystem.of({"shillings": interval(20), "pounds": dilated(20, NATURALS)})


def test_step_contraction_case():
    step = extraction_step(load("merged.sys"), 10_000)
    assert (step.pivot, step.radix, step.case) == ("A1", 2, Case.CONTRACTION)
    assert step.quotient == AdditiveSystem.of({"A1": finite([0, 2]), "A2": finite([0, 1]), "A3": dilated(4, NATURALS)})


def test_step_errors():
    with pytest.raises(SingletonSystem):
        extraction_step(AdditiveSystem.of({"n": NATURALS}), 100)
    with pytest.raises(InvalidSystem):
        extraction_step(AdditiveSystem.of({"a": finite([0, 2]), "b": finite([0, 3])}), 100)


def test_step_falls_back_to_enumeration():
    # neither [0,3) nor {0,3} is a multiple of 6, so [0,3) + 3*[0,2) has no symbolic quotient by 6
    odd = AdditiveSystem.of({"a": DirectSum((interval(3), dilated(3, interval(2)))), "b": dilated(6, NATURALS)})
    assert verify(odd, 256).ok
    step = extraction_step(odd, 256)
    assert not step.symbolic
    g = step.radix
    assert systems_equal(step.reconstruct(256), odd, 256 // g * g)


@pytest.mark.parametrize("name", CORPUS)
def test_step_reconstructs_corpus(name):
    sys = load(name)
    step = extraction_step(sys, 10_000)
    window = 10_000 // step.radix * step.radix
    assert systems_equal(step.reconstruct(window), sys, window)


@settings(max_examples=60, deadline=None)
@given(small_systems())
def test_step_reconstructs_random(sys):
    step = extraction_step(sys, 2000)
    window = 2000 // step.radix * step.radix
    assert systems_equal(step.reconstruct(window), sys, window)


def test_classify_monetary():
    res = classify(load("monetary.sys"))
    assert res.prefix == (12, 20)
    assert res.terminated
    assert res.partition.positions("pence") == {1}
    assert res.partition.positions("shillings") == {2}
    assert res.partition.rest == "pounds"
    assert res.partition.class_of(7) == "pounds"


def test_classify_merged():
    res = classify(load("merged.sys"))
    assert res.prefix == (2, 2, 2)
    assert res.partition.positions("A1") == {1, 3}


def test_classify_partial_when_depth_runs_out():
    res = classify(load("binary.sys"), max_depth=2)
    assert not res.terminated
    assert res.certified_bound == 4
    assert systems_equal(expand(res, 1000), load("binary.sys"), 1000)


@pytest.mark.parametrize("name", CORPUS)
def test_classify_expand_round_trip(name):
    sys = load(name)
    res = classify(sys)
    assert res.terminated
    assert systems_equal(expand(res, res.certified_bound), sys, res.certified_bound)


@settings(max_examples=60, deadline=None)
@given(small_systems())
def test_classify_expand_random(sys):
    res = classify(sys, bound=20_000)
    assert res.terminated
    assert systems_equal(expand(res, 2000), sys, 2000)


@settings(max_examples=40, deadline=None)
@given(radix_lists(1, 6, 6))
def test_classify_recovers_prefix(radices):
    res = classify(build_bns(GeneratorSchedule(radices, (2,)), len(radices)), bound=10**6)
    assert res.terminated
    assert res.prefix == radices


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_prime_intervals_indecomposable(p):
    assert is_decomposable_set(interval(p)) is None


@pytest.mark.parametrize("n", [4, 6, 12])
def test_composite_intervals_decompose(n):
    b, c = is_decomposable_set(interval(n))
    assert enumerate_set(direct_sum([b, c], 100), 100) == list(range(n))


def test_decompose_finite_and_infinite():
    b, c = is_decomposable_set(finite([0, 1, 4, 5]))
    assert {tuple(enumerate_set(b, 10)), tuple(enumerate_set(c, 10))} == {(0, 1), (0, 4)}
    assert is_decomposable_set(finite([0, 1, 3])) is None
    b, c = is_decomposable_set(NATURALS)
    assert enumerate_set(direct_sum([b, c], 50), 50) == list(range(50))


def test_bns_indecomposable_iff_prime_radices():
    assert is_indecomposable_system(BritishNumberSystem(GeneratorSchedule((2, 3, 5), (7,))))
    assert not is_indecomposable_system(BritishNumberSystem(GeneratorSchedule((12, 20), (2,))))
    assert not is_indecomposable_system(BritishNumberSystem(GeneratorSchedule((2,), (2, 9))))


@settings(max_examples=150, deadline=None)
@given(st.sets(st.integers(1, 14), max_size=7))
def test_decomposability_agrees_with_pair_oracle(extra):
    target = {0, *extra}
    split = is_decomposable_set(finite(target))
    pairs = pair_decompositions(target)
    assert (split is not None) == bool(pairs)
    if split is not None:
        b, c = (tuple(enumerate_set(x, 100)) for x in split)
        assert tuple(sorted((b, c))) in pairs


def test_classify_naturals_alone():
    n0 = AdditiveSystem.of({"all": NATURALS})
    res = classify(n0)
    assert (res.prefix, res.terminated, res.partition.rest) == ((), True, "all")
    assert expand(res, 100) == n0


def test_bns_equal_examples():
    two = BritishNumberSystem(GeneratorSchedule.constant(2))
    assert bns_equal(two, BritishNumberSystem(GeneratorSchedule((), (2, 2))))
    assert not bns_equal(
        BritishNumberSystem(GeneratorSchedule((12, 20), (2,))),
        BritishNumberSystem(GeneratorSchedule((12, 20), (3,))),
    )
    assert is_indecomposable_system(BritishNumberSystem(GeneratorSchedule((2, 3, 5, 7), (2,))))


def test_interval_four_split_is_binary():
    b, c = is_decomposable_set(interval(4))
    assert (enumerate_set(b, 10), enumerate_set(c, 10)) == ([0, 1], [0, 2])
    assert is_decomposable_set(interval(5)) is None


@pytest.mark.parametrize("name", CORPUS)
def test_quotient_valid_below_reduced_bound(name):
    step = extraction_step(load(name), 10_000)
    assert verify(step.quotient, 10_000 // step.radix).ok


def test_merged_expansion_at_512():
    sys = load("merged.sys")
    assert systems_equal(expand(classify(sys), 512), sys, 512)
